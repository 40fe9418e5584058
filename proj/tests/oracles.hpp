// Independent reference computations for the tests. Nothing here calls the
// library's graph algorithms; inputs are raw rotation systems.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "twodist/plane_graph.hpp"

namespace oracle {

using twodist::Rotations;
using twodist::VertexId;
using Adj = std::vector<std::vector<VertexId>>;

inline Adj adjacency(const Rotations& rot) {
    Adj a(rot.size());
    for (VertexId v = 0; v < rot.size(); ++v) {
        a[v] = rot[v];
        std::sort(a[v].begin(), a[v].end());
    }
    return a;
}

inline std::size_t edge_count(const Rotations& rot) {
    std::size_t s = 0;
    for (const auto& r : rot) s += r.size();
    return s / 2;
}

constexpr int kFar = -1;

inline std::vector<int> bfs(const Adj& a, VertexId s) {
    std::vector<int> dist(a.size(), kFar);
    std::queue<VertexId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        for (VertexId w : a[u])
            if (dist[w] == kFar) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline std::vector<std::vector<int>> all_pairs(const Adj& a) {
    std::vector<std::vector<int>> d;
    for (VertexId v = 0; v < a.size(); ++v) d.push_back(bfs(a, v));
    return d;
}

inline std::vector<VertexId> n2(const Adj& a, VertexId v) {
    const auto d = bfs(a, v);
    std::vector<VertexId> out;
    for (VertexId u = 0; u < a.size(); ++u)
        if (d[u] == 1 || d[u] == 2) out.push_back(u);
    return out;
}

inline std::size_t components(const Adj& a) {
    std::vector<bool> seen(a.size(), false);
    std::size_t c = 0;
    for (VertexId v = 0; v < a.size(); ++v) {
        if (seen[v]) continue;
        ++c;
        const auto d = bfs(a, v);
        for (VertexId u = 0; u < a.size(); ++u)
            if (d[u] != kFar) seen[u] = true;
    }
    return c;
}

/// Face lengths by walking darts with a map: after u->v comes v->w, w the
/// successor of u in v's clockwise list. Isolated vertices get one empty face.
inline std::vector<std::size_t> face_lengths(const Rotations& rot) {
    std::set<std::pair<VertexId, VertexId>> used;
    std::vector<std::size_t> lengths;
    for (VertexId v = 0; v < rot.size(); ++v) {
        if (rot[v].empty()) lengths.push_back(0);
        for (VertexId u : rot[v]) {
            if (used.count({v, u})) continue;
            std::size_t len = 0;
            VertexId a = v, b = u;
            while (!used.count({a, b})) {
                used.insert({a, b});
                ++len;
                const auto& rb = rot[b];
                const std::size_t i = static_cast<std::size_t>(std::find(rb.begin(), rb.end(), a) - rb.begin());
                const VertexId c = rb[(i + 1) % rb.size()];
                a = b;
                b = c;
            }
            lengths.push_back(len);
        }
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

/// V - E + F == 2 per component.
inline bool euler_ok(const Rotations& rot) {
    const auto f = face_lengths(rot).size();
    const auto c = components(adjacency(rot));
    return static_cast<long>(rot.size()) - static_cast<long>(edge_count(rot)) + static_cast<long>(f) ==
           2 * static_cast<long>(c);
}

inline bool is_valid_2distance(const Adj& a, const std::vector<int>& colors, int palette) {
    for (VertexId v = 0; v < a.size(); ++v) {
        if (colors[v] < 1 || colors[v] > palette) return false;
        for (VertexId u : n2(a, v))
            if (colors[u] == colors[v]) return false;
    }
    return true;
}

/// Smallest k with a 2-distance k-coloring, by plain enumeration in id order.
inline int brute_chi2(const Adj& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<VertexId>> near(n);
    for (VertexId v = 0; v < n; ++v) near[v] = n2(a, v);
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        std::function<bool(VertexId)> go = [&](VertexId v) {
            if (v == n) return true;
            for (int col = 1; col <= k; ++col) {
                bool ok = true;
                for (VertexId u : near[v])
                    if (u < v && c[u] == col) ok = false;
                if (!ok) continue;
                c[v] = col;
                if (go(v + 1)) return true;
            }
            c[v] = 0;
            return false;
        };
        if (go(0)) return k;
    }
}

/// Straight-line graph on a jittered grid: grid edges plus one diagonal per
/// chosen cell, random edge deletions, degrees capped at `max_degree`, largest
/// component kept. Rotations come from sorting neighbors by angle, so the
/// embedding is planar by geometry rather than by construction.
inline Rotations grid_graph(int w, int h, std::uint64_t seed, double keep = 0.85, int max_degree = 5) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int n = w * h;
    auto id = [&](int x, int y) { return static_cast<VertexId>(y * w + x); };
    std::vector<std::pair<double, double>> pos(n);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) pos[id(x, y)] = {x + 0.2 * (unit(rng) - 0.5), y + 0.2 * (unit(rng) - 0.5)};

    std::set<std::pair<VertexId, VertexId>> edges;
    auto add = [&](VertexId a, VertexId b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) add(id(x, y), id(x + 1, y));
            if (y + 1 < h) add(id(x, y), id(x, y + 1));
            if (x + 1 < w && y + 1 < h && unit(rng) < 0.7) {
                if (unit(rng) < 0.5) add(id(x, y), id(x + 1, y + 1));
                else add(id(x + 1, y), id(x, y + 1));
            }
        }
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (auto e : edges)
        if (unit(rng) < keep) kept.push_back(e);

    Adj a(n);
    for (auto [u, v] : kept) {
        a[u].push_back(v);
        a[v].push_back(u);
    }
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        while (static_cast<int>(a[v].size()) > max_degree) {
            const VertexId u = a[v].back();
            a[v].pop_back();
            a[u].erase(std::find(a[u].begin(), a[u].end(), v));
        }
    }

    // largest component
    std::vector<int> comp(n, -1);
    int best = -1;
    std::size_t best_size = 0;
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        if (comp[v] != -1) continue;
        const auto d = bfs(a, v);
        std::size_t size = 0;
        for (VertexId u = 0; u < static_cast<VertexId>(n); ++u)
            if (d[u] != kFar) {
                comp[u] = static_cast<int>(v);
                ++size;
            }
        if (size > best_size) {
            best_size = size;
            best = static_cast<int>(v);
        }
    }
    std::vector<VertexId> new_id(n, static_cast<VertexId>(-1));
    VertexId next = 0;
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
        if (comp[v] == best) new_id[v] = next++;

    Rotations rot(next);
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
        if (new_id[v] == static_cast<VertexId>(-1)) continue;
        auto nb = a[v];
        // clockwise = decreasing angle
        std::sort(nb.begin(), nb.end(), [&](VertexId p, VertexId q) {
            const double ap = std::atan2(pos[p].second - pos[v].second, pos[p].first - pos[v].first);
            const double aq = std::atan2(pos[q].second - pos[v].second, pos[q].first - pos[v].first);
            return ap > aq;
        });
        for (VertexId u : nb) rot[new_id[v]].push_back(new_id[u]);
    }
    return rot;
}

}  // namespace oracle
