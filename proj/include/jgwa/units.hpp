#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jgwa/aelem.hpp"

namespace jgwa {

// Element of H_n. Slot k maps j to the exponent of (H_k + j) for j >= 0 and of
// (H_k + j)_1 = (H_k - |j|)_1 for j < 0.
class HUnit {
public:
    explicit HUnit(int n = 1) : e_(n) {}
    static HUnit atom(int n, int slot, long j, long exp = 1);  // slot is 0-based
    static HUnit H_power(const Degree& alpha);

    int arity() const { return static_cast<int>(e_.size()); }
    const std::map<long, long>& slot(int k) const { return e_[k]; }
    std::map<long, long>& slot(int k) { return e_[k]; }
    bool is_identity() const;
    long deg(int k) const;

    HUnit operator*(const HUnit& o) const;
    HUnit inverse() const;
    HUnit permuted(const std::vector<int>& s) const;  // slot i -> slot s[i]
    friend bool operator==(const HUnit& a, const HUnit& b) { return a.e_ == b.e_; }

    EvSeq seq(int k) const;
    RatFunc ratfunc(int k) const;  // image modulo F

    std::string to_string() const;

private:
    void clean();
    std::vector<std::map<long, long>> e_;
};

AElem hunit_to_elem(const HUnit& u);
inline HUnit hunit_inv(const HUnit& u) { return u.inverse(); }
inline HUnit hunit_mul(const HUnit& a, const HUnit& b) { return a * b; }
inline long deg_H(const HUnit& u, int k) { return u.deg(k); }

HUnit psi(const HUnit& u);
HUnit psi_inv(const HUnit& u);
inline HUnit omega_as_mu(const HUnit& u) { return psi(u); }
// u = H^alpha * v with v of degree zero in every slot
std::pair<Degree, HUnit> split_degree(const HUnit& u);

// Finite sum of matrix units sum c E_{alpha beta}.
struct FinMat {
    int n = 1;
    std::map<std::pair<Degree, Degree>, Rat> entries;

    void add(const Degree& a, const Degree& b, const Rat& c);
    bool empty() const { return entries.empty(); }
};

Rat det1p(const FinMat& m);
FinMat inv1p(const FinMat& m);
AElem finmat_to_elem(const FinMat& m);
// the matrix of a if a lies in F_n
std::optional<FinMat> elem_to_finmat(const AElem& a);
// (1+a)(1+b) - 1
FinMat finmat_compose(const FinMat& a, const FinMat& b);

// scalar * h * w with w = 1 mod a_n and w_inv carried along.
struct UnitElem {
    Rat scalar = 1;
    HUnit h;
    AElem w, w_inv;

    static UnitElem identity(int n);
    static UnitElem from_finmat(const FinMat& m);  // 1 + m
    AElem elem() const;
    AElem inverse_elem() const;
    // w w_inv = w_inv w = 1 and w = 1 mod a_n
    bool certify() const;
};

UnitElem unit_decompose(const AElem& a);

}  // namespace jgwa
