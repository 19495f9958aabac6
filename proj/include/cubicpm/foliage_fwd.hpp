#pragma once

#include <vector>

#include "cubicpm/burls.hpp"

namespace cubicpm {

// Disjoint collection of burls; weight is beta1 per twig and beta2 per
// non-twig member.
struct Foliage {
    std::vector<Burl> burls;
};

}  // namespace cubicpm
