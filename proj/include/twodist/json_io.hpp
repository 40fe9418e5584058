#pragma once

#include <json.hpp>

#include "twodist/configurations.hpp"
#include "twodist/conflict.hpp"
#include "twodist/discharging.hpp"
#include "twodist/plane_graph.hpp"
#include "twodist/reducer.hpp"

namespace twodist {

using Json = nlohmann::ordered_json;

/// {"palette": k, "colors": {"0": c, ...}}
Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json to_json(const ConflictReport& r);

/// {"n", "m", "rotations": [[...], ...]}
Json graph_to_json(const PlaneGraph& g);

Json to_json(const Binding& b);

/// {"rule", "binding", "claimed_bound", "observed_d2"}
Json to_json(const ConfigMatch& m);

/// {"step", "rule", "deleted", "added_edges", "v_plus_e_before", "v_plus_e_after", "observed_d2"}
Json to_json(const ReductionTrace& t);

/// {"conservation", "negatives", "transfers", "configuration", "falsification"}
Json to_json(const AuditReport& r);

Json to_json(const TransferRecord& t);

}  // namespace twodist
