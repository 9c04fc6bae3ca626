#pragma once

#include <string>
#include <vector>

#include "jgwa/random.hpp"

namespace jgwa {

struct Check {
    std::string name;
    bool ok;
};

// GWA and matrix-unit relations for arity n, with `trials` random diagonals.
std::vector<Check> relation_suite(int n, Gen& g, int trials);

// act(ab, x^beta) = act(a, act(b, x^beta)) for beta in [0, beta_max]^n
std::vector<Check> faithfulness_suite(int n, Gen& g, int trials, long span = 3, long beta_max = 8);

}  // namespace jgwa
