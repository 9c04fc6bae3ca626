#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jgwa/rational.hpp"

namespace jgwa {

class Gen;

using Subset = std::uint32_t;  // bit i-1 stands for coordinate i
inline constexpr int kMaxLatticeN = 20;

int subset_size(Subset s);
std::string subset_to_string(Subset s);

// Proper nonzero ideal of A_n as the antichain of its minimal primes p_I.
class IdealAC {
public:
    // throws NotAntichain / IndexOutOfRange / InvalidArgument
    IdealAC(int n, std::vector<Subset> members);

    int n() const { return n_; }
    const std::vector<Subset>& members() const { return m_; }
    bool is_prime() const { return m_.size() == 1; }
    std::string to_string() const;
    friend bool operator==(const IdealAC& a, const IdealAC& b) { return a.n_ == b.n_ && a.m_ == b.m_; }

private:
    int n_;
    std::vector<Subset> m_;  // sorted
};

// "{1},{2,3}"
IdealAC parse_antichain(const std::string& text, int n);
// largest coordinate mentioned in the text
int antichain_arity(const std::string& text);

std::vector<Subset> minimal_elements(std::vector<Subset> s);
IdealAC ideal_product(const IdealAC& a, const IdealAC& b);  // = intersection
IdealAC ideal_sum(const IdealAC& a, const IdealAC& b);
bool contains(const IdealAC& a, const IdealAC& b);  // b inside a
inline int height(Subset prime) { return subset_size(prime); }

struct Stabilizer {
    Int order;
    Int index;
    std::vector<std::vector<int>> elements;  // 0-based images, only when listed
};

// permutations of {1..n} mapping the family of minimal primes onto itself
Stabilizer stabilizer(const IdealAC& a, bool list = false);

struct GenericStructure {
    int m;
    std::vector<std::pair<int, int>> profile;  // (h_i, n_i): n_i members of size h_i
    Int order;
};

std::optional<GenericStructure> generic_structure(const IdealAC& a);

// b_s = product of all p_I with |I| = s, s = 1..n
std::vector<IdealAC> invariant_ideals(int n);
// every proper nonzero ideal, n <= 5
std::vector<IdealAC> all_antichains(int n);
// prime ideals including 0
std::size_t prime_count(int n);

IdealAC random_antichain(Gen& g, int n);

Int factorial(int n);

}  // namespace jgwa
