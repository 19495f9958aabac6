#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cubicpm {

// Fixed-width bit set over edge ids. Word count is decided by the owning
// graph; all sets compared or combined must come from the same graph.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(int universe) : bits_((universe + 63) / 64, 0), universe_(universe) {}

    int universe() const { return universe_; }

    void set(int e) { bits_[e >> 6] |= (std::uint64_t{1} << (e & 63)); }
    void reset(int e) { bits_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
    bool test(int e) const { return (bits_[e >> 6] >> (e & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += __builtin_popcountll(w);
        return c;
    }

    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    EdgeSet operator^(const EdgeSet& o) const {
        EdgeSet r = *this;
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] ^= o.bits_[i];
        return r;
    }

    EdgeSet operator&(const EdgeSet& o) const {
        EdgeSet r = *this;
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
        return r;
    }

    EdgeSet operator|(const EdgeSet& o) const {
        EdgeSet r = *this;
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
        return r;
    }

    bool operator==(const EdgeSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const EdgeSet& o) const { return bits_ != o.bits_; }

    // Lexicographic on the sorted edge-id sequence: {0,2} < {0,3} < {1}.
    bool lex_less(const EdgeSet& o) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t a = bits_[i], b = o.bits_[i];
            if (a == b) continue;
            std::uint64_t diff = a ^ b;
            std::uint64_t low = diff & (~diff + 1);
            return (a & low) != 0;  // the smaller first-differing id belongs to the lex-smaller set
        }
        return false;
    }

    std::vector<int> ids() const {
        std::vector<int> out;
        for (int e = 0; e < universe_; ++e)
            if (test(e)) out.push_back(e);
        return out;
    }

    static EdgeSet from_ids(int universe, const std::vector<int>& ids) {
        EdgeSet s(universe);
        for (int e : ids) s.set(e);
        return s;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : bits_) {
            h ^= std::hash<std::uint64_t>{}(w);
            h *= 1099511628211ull;
        }
        return h;
    }

  private:
    std::vector<std::uint64_t> bits_;
    int universe_ = 0;
};

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

}  // namespace cubicpm
