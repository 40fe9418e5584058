#include "twodist/json_io.hpp"

#include <string>

#include "twodist/error.hpp"

namespace twodist {

Json to_json(const Coloring& c) {
    Json colors = Json::object();
    for (std::size_t v = 0; v < c.colors.size(); ++v) colors[std::to_string(v)] = c.colors[v];
    return Json{{"palette", c.palette}, {"colors", std::move(colors)}};
}

Coloring coloring_from_json(const Json& j) {
    try {
        const auto& colors = j.at("colors");
        Coloring c(colors.size(), j.at("palette").get<int>());
        for (const auto& [key, value] : colors.items()) {
            const std::size_t v = std::stoul(key);
            if (v >= c.colors.size()) throw Error(ErrorCode::ParseError, "color for vertex " + key + " out of range");
            c.colors[v] = value.get<int>();
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad coloring JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        throw Error(ErrorCode::ParseError, std::string("bad coloring JSON: ") + e.what());
    }
}

Json to_json(const ConflictReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back({{"u", v.u}, {"v", v.v}, {"color", v.color}});
    return Json{{"valid", r.valid},
                {"violations", std::move(violations)},
                {"uncolored", r.uncolored},
                {"out_of_palette", r.out_of_palette}};
}

Json graph_to_json(const PlaneGraph& g) {
    return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"rotations", g.rotations()}};
}

Json to_json(const Binding& b) {
    Json out = Json::object();
    for (std::size_t i = 0; i < kRoleCount; ++i)
        if (b.vertex[i]) out[std::string(role_name(static_cast<Role>(i)))] = *b.vertex[i];
    return out;
}

Json to_json(const ConfigMatch& m) {
    return Json{{"rule", m.rule->id},
                {"binding", to_json(m.binding)},
                {"claimed_bound", m.rule->claimed_d2_bound},
                {"observed_d2", m.observed_d2}};
}

Json to_json(const ReductionTrace& t) {
    Json added = Json::array();
    for (auto [a, b] : t.added_edges) added.push_back({a, b});
    return Json{{"step", t.step},
                {"rule", t.rule},
                {"deleted", t.deleted},
                {"added_edges", std::move(added)},
                {"v_plus_e_before", t.v_plus_e_before},
                {"v_plus_e_after", t.v_plus_e_after},
                {"observed_d2", t.observed_d2}};
}

Json to_json(const TransferRecord& t) {
    return Json{{"rule", t.rule},
                {"source", {{"kind", to_string(t.source.kind)}, {"id", t.source.id}}},
                {"sink", {{"kind", to_string(t.sink.kind)}, {"id", t.sink.id}}},
                {"amount", t.amount.str()}};
}

Json to_json(const AuditReport& r) {
    Json negatives = Json::array();
    for (const auto& n : r.negatives)
        negatives.push_back({{"kind", to_string(n.element.kind)}, {"id", n.element.id}, {"charge", n.charge.str()}});
    return Json{{"conservation", r.final_total.reduced()},
                {"negatives", std::move(negatives)},
                {"transfers", r.transfer_count},
                {"configuration", r.configuration ? to_json(*r.configuration) : Json(nullptr)},
                {"falsification", r.falsification}};
}

}  // namespace twodist
