#include "twodist/discharging.hpp"

#include <algorithm>
#include <numeric>

#include "twodist/error.hpp"

namespace twodist {

std::string Charge::str() const { return std::to_string(units_) + "/" + std::to_string(kDenominator); }

std::string Charge::reduced() const {
    const std::int64_t g = std::gcd(units_, kDenominator);
    const std::int64_t p = units_ / g, q = kDenominator / g;
    return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
}

bool is_rule_amount(Charge c) {
    using namespace amount;
    return c == third || c == ninth || c == fifth || c == fifteenth || c == two_fifteenths;
}

std::string_view to_string(ElementKind k) noexcept { return k == ElementKind::Vertex ? "vertex" : "face"; }

Charge& ChargeLedger::at(Element e) {
    return e.kind == ElementKind::Vertex ? vertex_charges.at(e.id) : face_charges.at(e.id);
}

Charge ChargeLedger::at(Element e) const {
    return e.kind == ElementKind::Vertex ? vertex_charges.at(e.id) : face_charges.at(e.id);
}

Charge ChargeLedger::total() const {
    Charge t;
    for (Charge c : vertex_charges) t += c;
    for (Charge c : face_charges) t += c;
    return t;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    ChargeLedger l;
    l.vertex_charges.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) l.vertex_charges.push_back(Charge::whole(g.degree(v) - 4));
    l.face_charges.reserve(g.face_count());
    for (const Face& f : g.faces()) l.face_charges.push_back(Charge::whole(static_cast<std::int64_t>(f.length()) - 4));
    const Charge expected = Charge::whole(-8 * static_cast<std::int64_t>(g.component_count()));
    if (l.total() != expected)
        throw Error(ErrorCode::EulerIdentityViolated,
                    "initial charges sum to " + l.total().reduced() + ", expected " + expected.reduced());
    return l;
}

namespace {

Element vertex(VertexId v) { return {ElementKind::Vertex, v}; }
Element face(FaceId f) { return {ElementKind::Face, f}; }

class Discharger {
public:
    Discharger(const PlaneGraph& g, ChargeLedger& l) : g_(g), l_(l) {}

    void run() {
        r1();
        r2();
        r3_r4();
        r5_r6();
        r7();
        special();
    }

private:
    void move(const char* rule, Element from, Element to, Charge a) {
        l_.at(from) -= a;
        l_.at(to) += a;
        l_.transfers.push_back({rule, from, to, a});
    }

    std::size_t len(FaceId f) const { return g_.face(f).length(); }

    void r1() {
        for (FaceId f = 0; f < g_.face_count(); ++f) {
            if (len(f) != 3) continue;
            for (VertexId v : g_.face_vertices(f)) move("R1", vertex(v), face(f), amount::third);
        }
    }

    void r2() {
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (g_.degree(v) != 3) continue;
            for (VertexId u : g_.rotation(v))
                if (g_.degree(u) == 5) move("R2", vertex(u), vertex(v), amount::ninth);
        }
    }

    void r3_r4() {
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            const int d = g_.degree(v);
            if (d != 3 && d != 4) continue;
            for (FaceId f : g_.faces_at(v)) {
                if (len(f) < 5) continue;
                if (d == 3) move("R3", face(f), vertex(v), amount::third);
                else move("R4", face(f), vertex(v), amount::fifth);
            }
        }
    }

    void r5_r6() {
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (g_.degree(v) != 5) continue;
            const auto around = g_.rotation(v);
            for (FaceId f : g_.faces_at(v)) {
                if (len(f) < 5) continue;
                const auto on_f = g_.face_vertices(f);
                const bool has_three = std::any_of(on_f.begin(), on_f.end(), [&](VertexId u) {
                    return g_.degree(u) == 3 && std::find(around.begin(), around.end(), u) != around.end();
                });
                if (has_three) move("R6", face(f), vertex(v), amount::ninth);
                else move("R5", face(f), vertex(v), amount::fifth);
            }
        }
    }

    void r7() {
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (g_.degree(v) != 5 || g_.metrics(v).m3 > 3) continue;
            for (VertexId u : g_.rotation(v)) {
                if (g_.degree(u) != 4) continue;
                const auto [f1, f2] = g_.faces_of_edge(v, u);
                int big = len(f1) >= 5 ? 1 : 0;
                if (f2 != f1 && len(f2) >= 5) ++big;
                if (big == 1) move("R7a", vertex(v), vertex(u), amount::fifteenth);
                else if (big == 2) move("R7b", vertex(v), vertex(u), amount::two_fifteenths);
            }
        }
    }

    void special() {
        // R8, R9, R10 in that order, each over vertices ascending.
        std::vector<std::optional<SpecialVertex>> kinds(g_.vertex_count());
        for (VertexId v = 0; v < g_.vertex_count(); ++v) kinds[v] = classify_special(g_, v);

        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            const auto& s = kinds[v];
            if (!s || s->kind != SpecialKind::Strong) continue;
            const auto& n = s->neighbors;
            const int twice = (g_.edge_in_two_triangles(n[0], n[1]) ? 1 : 0) +
                              (g_.edge_in_two_triangles(n[1], n[2]) ? 1 : 0);
            if (twice == 1) move("R8a", vertex(v), vertex(n[1]), amount::two_fifteenths);
            else if (twice == 2) move("R8b", vertex(v), vertex(n[1]), amount::fifth);
        }
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            const auto& s = kinds[v];
            if (!s || s->kind != SpecialKind::Good) continue;
            for (VertexId u : {s->neighbors[1], s->neighbors[2]})
                if (base_special_kind(g_, u) == SpecialKind::SemiBad) move("R9", vertex(v), vertex(u), amount::fifth);
        }
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            const auto& s = kinds[v];
            if (!s || s->kind != SpecialKind::Support) continue;
            for (VertexId u : g_.rotation(v))
                if (base_special_kind(g_, u) && g_.edge_in_two_triangles(v, u))
                    move("R10", vertex(v), vertex(u), amount::third);
        }
    }

    const PlaneGraph& g_;
    ChargeLedger& l_;
};

}  // namespace

ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger) {
    Discharger(g, ledger).run();
    return ledger;
}

AuditReport audit(const PlaneGraph& g) {
    AuditReport r;
    ChargeLedger start = initial_charges(g);
    r.initial_total = start.total();
    r.ledger = apply_rules(g, std::move(start));
    r.final_total = r.ledger.total();
    r.conserved = r.final_total == r.initial_total;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (r.ledger.vertex_charges[v] < Charge{}) r.negatives.push_back({vertex(v), r.ledger.vertex_charges[v]});
    for (FaceId f = 0; f < g.face_count(); ++f)
        if (r.ledger.face_charges[f] < Charge{}) r.negatives.push_back({face(f), r.ledger.face_charges[f]});
    r.transfer_count = r.ledger.transfers.size();
    r.configuration = detect(g);
    r.falsification = !r.configuration && r.negatives.empty();
    return r;
}

}  // namespace twodist
