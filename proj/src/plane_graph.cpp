#include "twodist/plane_graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <sstream>

namespace twodist {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::AsymmetricRotation: return "AsymmetricRotation";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::EmbeddingBroken: return "EmbeddingBroken";
        case ErrorCode::DegreeOverflow: return "DegreeOverflow";
        case ErrorCode::NoAvailableColor: return "NoAvailableColor";
        case ErrorCode::AnomalyNoConfiguration: return "AnomalyNoConfiguration";
        case ErrorCode::EulerIdentityViolated: return "EulerIdentityViolated";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::GenerationFailed: return "GenerationFailed";
    }
    return "Unknown";
}

namespace {

constexpr DartId kNoDart = std::numeric_limits<DartId>::max();

std::vector<std::size_t> component_labels(const Rotations& rot, std::size_t& count) {
    constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> label(rot.size(), kUnset);
    count = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < rot.size(); ++s) {
        if (label[s] != kUnset) continue;
        label[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId u : rot[v]) {
                if (label[u] == kUnset) {
                    label[u] = count;
                    stack.push_back(u);
                }
            }
        }
        ++count;
    }
    return label;
}

}  // namespace

PlaneGraph PlaneGraph::from_rotations(Rotations rotations, Connectivity connectivity) {
    return PlaneGraph(std::move(rotations), connectivity, 0);
}

PlaneGraph::PlaneGraph(Rotations rotations, Connectivity connectivity, int)
    : rotations_(std::move(rotations)) {
    const std::size_t n = rotations_.size();
    if (n == 0) throw Error(ErrorCode::ParseError, "graph has no vertices");

    offset_.resize(n + 1);
    DartId darts = 0;
    for (VertexId v = 0; v < n; ++v) {
        offset_[v] = darts;
        const auto& r = rotations_[v];
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (r[i] >= n)
                throw Error(ErrorCode::UnknownVertex,
                            "vertex " + std::to_string(v) + " lists unknown neighbor " + std::to_string(r[i]));
            if (r[i] == v) throw Error(ErrorCode::NotSimple, "loop at vertex " + std::to_string(v));
            for (std::size_t j = 0; j < i; ++j)
                if (r[j] == r[i])
                    throw Error(ErrorCode::NotSimple, "repeated edge " + std::to_string(v) + "-" +
                                                          std::to_string(r[i]));
        }
        darts += static_cast<DartId>(r.size());
    }
    offset_[n] = darts;

    dart_head_.resize(darts);
    reverse_.assign(darts, kNoDart);
    for (VertexId v = 0; v < n; ++v) {
        const auto& r = rotations_[v];
        for (std::size_t i = 0; i < r.size(); ++i) {
            const DartId d = offset_[v] + static_cast<DartId>(i);
            dart_head_[d] = r[i];
            const auto& back = rotations_[r[i]];
            auto it = std::find(back.begin(), back.end(), v);
            if (it == back.end())
                throw Error(ErrorCode::AsymmetricRotation, std::to_string(v) + " lists " + std::to_string(r[i]) +
                                                               " but not conversely");
            reverse_[d] = offset_[r[i]] + static_cast<DartId>(it - back.begin());
        }
    }
    edge_count_ = darts / 2;

    std::size_t components = 0;
    const auto label = component_labels(rotations_, components);
    component_count_ = components;
    if (components > 1 && connectivity == Connectivity::RequireConnected)
        throw Error(ErrorCode::Disconnected, std::to_string(components) + " components");

    // Trace dart orbits; each face starts at its smallest dart.
    dart_face_.assign(darts, std::numeric_limits<FaceId>::max());
    std::vector<std::size_t> faces_per_component(components, 0);
    std::vector<std::size_t> edges_per_component(components, 0);
    std::vector<std::size_t> vertices_per_component(components, 0);
    for (VertexId v = 0; v < n; ++v) {
        ++vertices_per_component[label[v]];
        edges_per_component[label[v]] += rotations_[v].size();
    }
    for (DartId d0 = 0; d0 < darts; ++d0) {
        if (dart_face_[d0] != std::numeric_limits<FaceId>::max()) continue;
        const FaceId f = static_cast<FaceId>(faces_.size());
        Face face;
        DartId d = d0;
        do {
            dart_face_[d] = f;
            const VertexId head = dart_head_[d];
            const VertexId tail = dart_head_[reverse_[d]];
            face.boundary.push_back({tail, head});
            const DartId back = reverse_[d];  // head -> tail, at position j in rotation(head)
            const DartId j = back - offset_[head];
            const auto deg = static_cast<DartId>(rotations_[head].size());
            d = offset_[head] + (j + 1) % deg;
        } while (d != d0);
        ++faces_per_component[label[face.boundary.front().from]];
        faces_.push_back(std::move(face));
    }
    for (VertexId v = 0; v < n; ++v) {
        if (rotations_[v].empty()) {
            isolated_faces_.emplace_back(v, static_cast<FaceId>(faces_.size()));
            faces_.push_back(Face{});
            ++faces_per_component[label[v]];
        }
    }
    for (std::size_t c = 0; c < components; ++c) {
        const auto V = static_cast<long>(vertices_per_component[c]);
        const auto E = static_cast<long>(edges_per_component[c] / 2);
        const auto F = static_cast<long>(faces_per_component[c]);
        if (V - E + F != 2)
            throw Error(ErrorCode::NotPlanarEmbedding, "Euler count V-E+F = " + std::to_string(V - E + F) +
                                                           " for component " + std::to_string(c));
    }

    max_degree_ = 0;
    min_degree_ = std::numeric_limits<int>::max();
    for (const auto& r : rotations_) {
        max_degree_ = std::max(max_degree_, static_cast<int>(r.size()));
        min_degree_ = std::min(min_degree_, static_cast<int>(r.size()));
    }
}

void PlaneGraph::check_vertex(VertexId v) const {
    if (v >= rotations_.size())
        throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in graph of order " +
                                                  std::to_string(rotations_.size()));
}

std::span<const VertexId> PlaneGraph::rotation(VertexId v) const {
    check_vertex(v);
    return rotations_[v];
}

int PlaneGraph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(rotations_[v].size());
}

bool PlaneGraph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& r = rotations_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

std::vector<std::pair<VertexId, VertexId>> PlaneGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId v = 0; v < rotations_.size(); ++v)
        for (VertexId u : rotations_[v])
            if (v < u) out.emplace_back(v, u);
    std::sort(out.begin(), out.end());
    return out;
}

DartId PlaneGraph::dart_id(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& r = rotations_[u];
    auto it = std::find(r.begin(), r.end(), v);
    if (it == r.end())
        throw Error(ErrorCode::UnknownVertex, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    return offset_[u] + static_cast<DartId>(it - r.begin());
}

FaceId PlaneGraph::face_of_dart(VertexId u, VertexId v) const { return dart_face_[dart_id(u, v)]; }

FaceId PlaneGraph::corner_face(VertexId v, std::size_t i) const {
    check_vertex(v);
    const auto& r = rotations_[v];
    if (r.empty()) {
        for (auto [w, f] : isolated_faces_)
            if (w == v) return f;
    }
    // Dart (v -> r[i+1]) follows (r[i] -> v) in the face walk.
    return dart_face_[offset_[v] + static_cast<DartId>((i + 1) % r.size())];
}

std::vector<FaceId> PlaneGraph::faces_at(VertexId v) const {
    check_vertex(v);
    std::vector<FaceId> out;
    const std::size_t deg = rotations_[v].size();
    if (deg == 0) return {corner_face(v, 0)};
    for (std::size_t i = 0; i < deg; ++i) {
        const FaceId f = corner_face(v, i);
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    return out;
}

std::pair<FaceId, FaceId> PlaneGraph::faces_of_edge(VertexId u, VertexId v) const {
    const DartId d = dart_id(u, v);
    return {dart_face_[d], dart_face_[reverse_[d]]};
}

bool PlaneGraph::edge_in_two_triangles(VertexId u, VertexId v) const {
    if (!has_edge(u, v)) return false;
    auto [a, b] = faces_of_edge(u, v);
    return a != b && faces_[a].length() == 3 && faces_[b].length() == 3;
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
    std::vector<VertexId> out;
    for (const Dart& d : face(f).boundary) out.push_back(d.from);
    if (out.empty())
        for (auto [w, g] : isolated_faces_)
            if (g == f) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> PlaneGraph::second_neighborhood(VertexId v) const {
    check_vertex(v);
    std::vector<VertexId> out;
    for (VertexId u : rotations_[v]) {
        out.push_back(u);
        for (VertexId w : rotations_[u])
            if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int PlaneGraph::d2(VertexId v) const { return static_cast<int>(second_neighborhood(v).size()); }

VertexMetrics PlaneGraph::metrics(VertexId v) const {
    VertexMetrics m;
    m.degree = degree(v);
    for (VertexId u : rotations_[v]) {
        switch (rotations_[u].size()) {
            case 3: ++m.n3; break;
            case 4: ++m.n4; break;
            case 5: ++m.n5; break;
            default: break;
        }
    }
    const auto fs = faces_at(v);
    m.incident_faces = static_cast<int>(fs.size());
    for (FaceId f : fs) {
        const auto len = faces_[f].length();
        if (len == 3) ++m.m3;
        else if (len == 4) ++m.m4;
        else if (len >= 5) ++m.m5plus;
    }
    m.second_neighborhood = second_neighborhood(v);
    m.d2 = static_cast<int>(m.second_neighborhood.size());
    return m;
}

std::optional<std::size_t> PlaneGraph::distance(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(rotations_.size(), kUnseen);
    std::deque<VertexId> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : rotations_[x]) {
            if (dist[y] != kUnseen) continue;
            dist[y] = dist[x] + 1;
            if (y == v) return dist[y];
            queue.push_back(y);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<VertexId>> PlaneGraph::components() const {
    std::size_t count = 0;
    const auto label = component_labels(rotations_, count);
    std::vector<std::vector<VertexId>> out(count);
    for (VertexId v = 0; v < rotations_.size(); ++v) out[label[v]].push_back(v);
    return out;
}

PlaneGraph PlaneGraph::subgraph(std::span<const VertexId> vertices) const {
    std::vector<VertexId> renumber(rotations_.size(), std::numeric_limits<VertexId>::max());
    for (std::size_t i = 0; i < vertices.size(); ++i) renumber[vertices[i]] = static_cast<VertexId>(i);
    Rotations rot(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (VertexId u : rotations_[vertices[i]]) {
            if (renumber[u] == std::numeric_limits<VertexId>::max())
                throw Error(ErrorCode::UnknownVertex, "subgraph vertex set is not closed under adjacency");
            rot[i].push_back(renumber[u]);
        }
    }
    return from_rotations(std::move(rot), Connectivity::AllowDisconnected);
}

std::optional<std::size_t> PlaneGraph::girth() const {
    std::optional<std::size_t> best;
    const std::size_t n = rotations_.size();
    constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n);
    std::vector<VertexId> parent(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        std::deque<VertexId> queue{s};
        dist[s] = 0;
        parent[s] = s;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            for (VertexId y : rotations_[x]) {
                if (dist[y] == kUnseen) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    const std::size_t len = dist[x] + dist[y] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<long long> parse_ints(std::string_view s, std::size_t line_no) {
    std::vector<long long> out;
    while (true) {
        s = trim(s);
        if (s.empty()) break;
        long long value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || value < 0 || (ptr != s.data() + s.size() && *ptr != ' ' && *ptr != '\t'))
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected nonnegative integer");
        out.push_back(value);
        s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    }
    return out;
}

}  // namespace

PlaneGraph from_rotation_text(std::string_view text) {
    std::optional<std::pair<long long, long long>> header;
    Rotations rot;
    std::vector<bool> seen;
    std::size_t line_no = 0;
    std::size_t given = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!header) {
            auto nums = parse_ints(line, line_no);
            if (nums.size() != 2 || nums[0] == 0)
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": header must be `n m`");
            header = {nums[0], nums[1]};
            rot.resize(static_cast<std::size_t>(nums[0]));
            seen.assign(rot.size(), false);
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing ':'");
        auto head = parse_ints(line.substr(0, colon), line_no);
        if (head.size() != 1)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad vertex label");
        const auto v = static_cast<std::size_t>(head[0]);
        if (v >= rot.size())
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": vertex out of range");
        if (seen[v])
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": vertex listed twice");
        seen[v] = true;
        ++given;
        for (long long u : parse_ints(line.substr(colon + 1), line_no)) {
            if (static_cast<std::size_t>(u) >= rot.size())
                throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": neighbor out of range");
            rot[v].push_back(static_cast<VertexId>(u));
        }
    }
    if (!header) throw Error(ErrorCode::ParseError, "empty document");
    if (given != rot.size())
        throw Error(ErrorCode::ParseError, "expected " + std::to_string(rot.size()) + " rotation lines, got " +
                                               std::to_string(given));
    std::size_t darts = 0;
    for (const auto& r : rot) darts += r.size();
    auto g = PlaneGraph::from_rotations(std::move(rot));
    if (static_cast<long long>(g.edge_count()) != header->second || darts % 2 != 0)
        throw Error(ErrorCode::ParseError, "header declares " + std::to_string(header->second) + " edges, found " +
                                               std::to_string(g.edge_count()));
    return g;
}

std::string to_rotation_text(const PlaneGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << v << ':';
        for (VertexId u : g.rotation(v)) out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

}  // namespace twodist
