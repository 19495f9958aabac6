#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubicpm/contraction.hpp"
#include "cubicpm/cuts.hpp"
#include "cubicpm/isomorphism.hpp"

namespace cubicpm {

// Shared memo keyed by canonical form; inserts are idempotent so concurrent
// use only needs the lock around map access.
class CoreMemo {
  public:
    bool lookup(const std::string& key, bool& value) {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(key);
        if (it == map_.end()) return false;
        value = it->second;
        return true;
    }
    void store(const std::string& key, bool value) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(key, value);
    }

  private:
    std::mutex mu_;
    std::unordered_map<std::string, bool> map_;
};

inline CoreMemo& core_memo() {
    static CoreMemo memo;
    return memo;
}

struct CoreStep {
    std::vector<int> cut_edges;  // in the coordinates of the graph at this step
    std::vector<int> kept_side;  // vertices kept by the contraction
};

struct CoreResult {
    bool has_core = false;
    std::vector<CoreStep> witness;  // contraction sequence reaching the core
};

namespace detail {

inline bool is_core(const CubicMultigraph& g) {
    return g.vertex_count() >= 6 && is_cyclically_4ec(g);
}

inline bool has_core_search(const CubicMultigraph& g, CoreMemo& memo) {
    if (g.vertex_count() < 6) return false;  // contractions only shrink
    std::string key = canonical_form(g);
    bool cached;
    if (memo.lookup(key, cached)) return cached;
    bool result = false;
    if (is_core(g)) {
        result = true;
    } else {
        for (const auto& cut : cyclic_cuts_2_3(g)) {
            auto rec = cut_contract(g, cut);
            if (has_core_search(rec.with_side.graph, memo) ||
                has_core_search(rec.with_complement.graph, memo)) {
                result = true;
                break;
            }
        }
    }
    memo.store(key, result);
    return result;
}

}  // namespace detail

// True iff some sequence of 2-/3-cut-contractions reaches a cyclically
// 4-edge-connected graph on at least 6 vertices. Exhaustive over cyclic cuts
// with canonical-form memoization; a witness sequence is reconstructed on the
// true path.
inline CoreResult has_core(const CubicMultigraph& g, CoreMemo& memo = core_memo()) {
    CoreResult res;
    res.has_core = detail::has_core_search(g, memo);
    if (!res.has_core) return res;
    CubicMultigraph cur = g;
    while (!detail::is_core(cur)) {
        bool advanced = false;
        for (const auto& cut : cyclic_cuts_2_3(cur)) {
            auto rec = cut_contract(cur, cut);
            for (const ContractionPiece* piece : {&rec.with_side, &rec.with_complement}) {
                if (!detail::has_core_search(piece->graph, memo)) continue;
                CoreStep step;
                step.cut_edges = cut.cut_edges;
                for (int v : piece->vertex_origin)
                    if (v >= 0) step.kept_side.push_back(v);
                res.witness.push_back(std::move(step));
                cur = piece->graph;
                advanced = true;
                break;
            }
            if (advanced) break;
        }
        require(advanced, ErrorKind::PreconditionFailed, "core witness reconstruction stalled");
    }
    return res;
}

}  // namespace cubicpm
