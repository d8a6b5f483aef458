#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace zf {

// Dense bit-indexed subset of {0, ..., 61}. The library caps graphs at 62
// vertices (the graph6 short-form range), so one machine word suffices and
// set algebra is branch-free.
struct VertexSet {
  std::uint64_t bits = 0;

  static constexpr int max_vertices = 62;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  static VertexSet from(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n <= 0 ? 0 : (n >= 64 ? ~0ull : ((1ull << n) - 1)));
  }

  static constexpr VertexSet single(int v) { return VertexSet(1ull << v); }

  bool contains(int v) const { return v >= 0 && v < 64 && ((bits >> v) & 1); }
  void add(int v) {
    assert(v >= 0 && v < 64);
    bits |= 1ull << v;
  }
  void remove(int v) { bits &= ~(1ull << v); }

  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  int lowest() const {
    assert(bits != 0);
    return std::countr_zero(bits);
  }
  int highest() const {
    assert(bits != 0);
    return 63 - std::countl_zero(bits);
  }

  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits ^ b.bits); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
  VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }
  friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend bool operator<(VertexSet a, VertexSet b) { return a.bits < b.bits; }

  template <class F>
  void for_each(F f) const {
    for (std::uint64_t b = bits; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }
};

}  // namespace zf
