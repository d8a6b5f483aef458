#pragma once

#include <json.hpp>

#include "zf/families.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/graph.hpp"
#include "zf/solvers.hpp"
#include "zf/structure.hpp"

namespace zf {

using nlohmann::json;

json to_json(const Graph& g);
json to_json(VertexSet s);
json to_json(const Cover& c);
json to_json(const ForcingRun& run);
json to_json(const ParameterResult& res);
json to_json(const BlockCycleCertificate& cert);
json to_json(const OuterEmbedding& emb);
json to_json(const ChordalPeo& peo);
json to_json(const KTreeCertificate& cert);
json to_json(const ParallelPathsCertificate& cert);
json to_json(const FamilySolution& sol);
json to_json(const GenSpec& spec);

GenSpec genspec_from_json(const json& j);

}  // namespace zf
