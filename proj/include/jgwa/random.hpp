#pragma once

#include <cstdint>
#include <random>

#include "jgwa/diag.hpp"

namespace jgwa {

class AElem;
struct Aut;

// Seeded generators for property tests and the verify command.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    Rat rat(long span = 5);
    Rat nonzero_rat(long span = 5);

    // product of linear factors (H+c) and a scalar, each side of degree <= deg
    RatFunc ratfunc(int deg);
    EvSeq evseq(int deg, long exc_span = 5);
    DiagN diag(int n, int deg, int max_terms = 2);

    // support in [-span, span]^n, up to ncomp components
    AElem aelem(int n, long span = 3, int ncomp = 3, int deg = 1);

    // s t_lambda mu_u omega_phi with small u atoms and phi = 1 + finite matrix in [0, box)^n
    Aut aut(int n, long box = 3, int entries = 3);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace jgwa
