#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

namespace detail {

// Stable color refinement: split classes by the multiset of neighbor colors
// (per incident edge, so multiplicities count).
inline void refine_colors(const Multigraph& g, std::vector<int>& color) {
    const int n = g.vertex_count();
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> keys(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig;
            sig.reserve(g.degree(v) + 1);
            sig.push_back(color[v]);
            for (int e : g.incident(v)) sig.push_back(color[g.other_end(e, v)]);
            std::sort(sig.begin() + 1, sig.end());
            keys[v] = {std::move(sig), v};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int classes = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++classes;
            next[sorted[i].second] = classes;
        }
        bool changed = false;
        for (int v = 0; v < n; ++v) changed |= next[v] != color[v];
        color = std::move(next);
        if (!changed) break;
    }
}

inline std::string encode_under(const Multigraph& g, const std::vector<int>& new_id) {
    const int n = g.vertex_count();
    std::string enc(static_cast<std::size_t>(n) * n, '\0');
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        int a = new_id[u], b = new_id[v];
        if (a > b) std::swap(a, b);
        enc[static_cast<std::size_t>(a) * n + b] += 1;
    }
    return std::to_string(n) + "|" + enc;
}

// Refinement + individualization with discovered-automorphism pruning: when
// two leaves encode equally, the relabeling between them is an automorphism;
// siblings equivalent under an automorphism fixing the current prefix are
// skipped.
class CanonSearch {
  public:
    explicit CanonSearch(const Multigraph& g) : g_(g), n_(g.vertex_count()) {}

    std::string run() {
        if (n_ == 0) return "0|";
        std::vector<int> color(n_, 0);
        search(std::move(color));
        return best_;
    }

  private:
    static constexpr std::size_t kMaxAutos = 512;

    bool equivalent_under_stabilizer(int u, int v) const {
        for (const auto& a : autos_) {
            if (a[u] != v) continue;
            bool fixes = true;
            for (int p : prefix_)
                if (a[p] != p) {
                    fixes = false;
                    break;
                }
            if (fixes) return true;
        }
        return false;
    }

    void search(std::vector<int> color) {
        refine_colors(g_, color);
        std::vector<int> count(n_, 0);
        for (int v = 0; v < n_; ++v) ++count[color[v]];
        int cell = -1;
        for (int c = 0; c < n_; ++c)
            if (count[c] >= 2) {
                cell = c;
                break;
            }
        if (cell < 0) {
            std::string enc = encode_under(g_, color);
            if (!have_best_ || enc < best_) {
                best_ = std::move(enc);
                best_perm_ = color;
                have_best_ = true;
            } else if (enc == best_ && autos_.size() < kMaxAutos) {
                std::vector<int> inv(n_);
                for (int v = 0; v < n_; ++v) inv[best_perm_[v]] = v;
                std::vector<int> a(n_);
                for (int v = 0; v < n_; ++v) a[v] = inv[color[v]];
                autos_.push_back(std::move(a));
            }
            return;
        }
        std::vector<int> tried;
        for (int v = 0; v < n_; ++v) {
            if (color[v] != cell) continue;
            bool skip = false;
            for (int u : tried)
                if (equivalent_under_stabilizer(u, v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            tried.push_back(v);
            auto branched = color;
            for (int w = 0; w < n_; ++w)
                if (branched[w] >= cell && w != v) branched[w] += 1;
            prefix_.push_back(v);
            search(std::move(branched));
            prefix_.pop_back();
        }
    }

    const Multigraph& g_;
    int n_;
    std::string best_;
    std::vector<int> best_perm_;
    bool have_best_ = false;
    std::vector<int> prefix_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace detail

// Canonical form by iterative refinement plus backtracking individualization;
// equal strings iff isomorphic (multiplicities included).
inline std::string canonical_form(const Multigraph& g) {
    detail::CanonSearch search(g);
    return search.run();
}

inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace cubicpm
