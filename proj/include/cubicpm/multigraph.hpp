#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cubicpm/errors.hpp"

namespace cubicpm {

// Loopless multigraph with stable integer edge ids. Parallel edges are
// distinct edges: they matter both for matchings (B3 has three perfect
// matchings, not one) and for cuts.
class Multigraph {
  public:
    Multigraph() = default;

    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : n_(vertex_count), edges_(std::move(edge_list)) {
        require(n_ >= 0, ErrorKind::BadParams, "negative vertex count");
        adj_.assign(n_, {});
        for (int e = 0; e < edge_count(); ++e) {
            auto [u, v] = edges_[e];
            require(u >= 0 && u < n_ && v >= 0 && v < n_, ErrorKind::BadIndex,
                    "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
            require(u != v, ErrorKind::LoopEdge,
                    "loop at vertex " + std::to_string(u));
            adj_[u].push_back(e);
            adj_[v].push_back(e);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> ends(int e) const { return edges_[e]; }

    int other_end(int e, int v) const {
        auto [a, b] = edges_[e];
        return a == v ? b : a;
    }

    // Incident edge ids, in insertion order.
    const std::vector<int>& incident(int v) const { return adj_[v]; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : adj_[v]) {
                int w = other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        return reached == n_;
    }

    bool is_regular(int k) const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != k) return false;
        return true;
    }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// 3-regular validated multigraph. Construction enforces all invariants:
// degree exactly 3 everywhere, no loops, even vertex count.
class CubicMultigraph : public Multigraph {
  public:
    CubicMultigraph() = default;

    CubicMultigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : Multigraph(vertex_count, std::move(edge_list)) {
        for (int v = 0; v < this->vertex_count(); ++v)
            require(degree(v) == 3, ErrorKind::NotCubic,
                    "vertex " + std::to_string(v) + " has degree " + std::to_string(degree(v)));
        require(this->vertex_count() % 2 == 0, ErrorKind::NotCubic, "odd vertex count");
    }
};

inline CubicMultigraph build_graph(const std::vector<std::pair<int, int>>& edge_list, int vertex_count) {
    return CubicMultigraph(vertex_count, edge_list);
}

// --- vertex-set helpers -----------------------------------------------------

inline std::vector<char> subset_mask(const Multigraph& g, const std::vector<int>& xs) {
    std::vector<char> mask(g.vertex_count(), 0);
    for (int v : xs) {
        require(v >= 0 && v < g.vertex_count(), ErrorKind::BadIndex,
                "vertex " + std::to_string(v) + " out of range");
        mask[v] = 1;
    }
    return mask;
}

inline std::vector<int> mask_to_vertices(const std::vector<char>& mask) {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(mask.size()); ++v)
        if (mask[v]) out.push_back(v);
    return out;
}

inline std::vector<int> complement_vertices(const Multigraph& g, const std::vector<char>& mask) {
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!mask[v]) out.push_back(v);
    return out;
}

// Edges with both ends in X.
inline std::vector<int> edges_inside(const Multigraph& g, const std::vector<char>& mask) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        if (mask[u] && mask[v]) out.push_back(e);
    }
    return out;
}

// delta(X): edges with exactly one end in X.
inline std::vector<int> edges_crossing(const Multigraph& g, const std::vector<char>& mask) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        if (mask[u] != mask[v]) out.push_back(e);
    }
    return out;
}

// E_X = E(G|X) together with delta(X).
inline std::vector<int> edges_touching(const Multigraph& g, const std::vector<char>& mask) {
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        if (mask[u] || mask[v]) out.push_back(e);
    }
    return out;
}

// --- graph text format ------------------------------------------------------
//
// First non-comment line: "n m"; then m lines "u v" (0-indexed). Lines
// starting with '#' are ignored. Repeated "u v" lines encode parallel edges.

inline Multigraph read_multigraph(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                fail(ErrorKind::BadParams, "expected header line 'n m'");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v)) fail(ErrorKind::BadParams, "expected edge line 'u v', got '" + line + "'");
        edges.emplace_back(u, v);
        if (static_cast<int>(edges.size()) == m) break;
    }
    require(n >= 0, ErrorKind::BadParams, "empty graph input");
    require(static_cast<int>(edges.size()) == m, ErrorKind::BadParams,
            "expected " + std::to_string(m) + " edges, got " + std::to_string(edges.size()));
    return Multigraph(n, std::move(edges));
}

inline CubicMultigraph read_cubic(std::istream& in) {
    Multigraph g = read_multigraph(in);
    return CubicMultigraph(g.vertex_count(), g.edges());
}

// Writer emits edges sorted by (min endpoint, max endpoint); parallel copies
// stay adjacent, which pins the multiplicity index order.
inline void write_multigraph(std::ostream& out, const Multigraph& g) {
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) sorted.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(sorted.begin(), sorted.end());
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : sorted) out << u << " " << v << "\n";
}

inline std::string to_text(const Multigraph& g) {
    std::ostringstream os;
    write_multigraph(os, g);
    return os.str();
}

inline CubicMultigraph cubic_from_text(const std::string& text) {
    std::istringstream is(text);
    return read_cubic(is);
}

}  // namespace cubicpm
