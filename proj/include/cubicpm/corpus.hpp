#pragma once

#include <string>
#include <vector>

#include "cubicpm/enumerate_graphs.hpp"
#include "cubicpm/generators.hpp"

namespace cubicpm {

struct CorpusEntry {
    std::string name;
    CubicMultigraph graph;
};

// The named generator instances the verification suites run over. Fixed and
// versioned: changing this list is a schema change for verify-lemmas.
inline std::vector<CorpusEntry> corpus_catalog() {
    std::vector<CorpusEntry> out;
    out.push_back({"k4", make_k4()});
    out.push_back({"b3", make_b3()});
    out.push_back({"k33", make_k33()});
    out.push_back({"petersen", make_petersen()});
    out.push_back({"prism", make_prism()});
    out.push_back({"double_triangle", make_double_triangle()});
    for (int blocks : {2, 3, 4, 5, 6})
        out.push_back({"necklace(" + std::to_string(blocks) + ")", make_necklace(blocks)});
    for (int length : {2, 4, 8, 12})
        out.push_back({"k4_chain(" + std::to_string(length) + ")", make_k4_chain(length)});
    out.push_back({"triangle_replace(k4,0)", triangle_replace(make_k4(), 0)});
    out.push_back({"triangle_replace(petersen,0)", triangle_replace(make_petersen(), 0)});
    out.push_back({"triangle_replace^2(petersen)",
                   triangle_replace(triangle_replace(make_petersen(), 0), 3)});
    return out;
}

// Catalog plus every cubic bridgeless multigraph class up to max_n vertices.
inline std::vector<CorpusEntry> full_corpus(int max_n = 10) {
    auto out = corpus_catalog();
    for (int n = 2; n <= max_n; n += 2) {
        int index = 0;
        for (const auto& g : bridgeless_cubic_classes(n))
            out.push_back({"exhaustive(n=" + std::to_string(n) + ")#" + std::to_string(index++), g});
    }
    return out;
}

}  // namespace cubicpm
