#pragma once

#include <map>
#include <string>
#include <vector>

#include "jgwa/diag.hpp"

namespace jgwa {

using Degree = std::vector<long>;

// Element of P_n: exponent vector -> coefficient, no zero entries.
using Poly = std::map<Degree, Rat>;

Poly monomial(const Degree& beta, const Rat& c = 1);
std::string poly_to_string(const Poly& p);

// Element of A_n as the operator sum_alpha shift_alpha o diag(d_alpha) on P_n.
class AElem {
public:
    explicit AElem(int n = 1) : n_(n) {}

    static AElem scalar(int n, const Rat& c);
    static AElem diag(const DiagN& d);
    static AElem component(const Degree& alpha, const DiagN& d);
    static AElem shift(const Degree& alpha) { return component(alpha, DiagN::one(static_cast<int>(alpha.size()))); }

    int arity() const { return n_; }
    const std::map<Degree, DiagN>& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    AElem& operator+=(const AElem& o);
    AElem& operator-=(const AElem& o);
    AElem& operator*=(const Rat& c);
    friend AElem operator+(AElem a, const AElem& b) { return a += b; }
    friend AElem operator-(AElem a, const AElem& b) { return a -= b; }
    friend AElem operator*(AElem a, const Rat& c) { return a *= c; }
    friend AElem operator*(const Rat& c, AElem a) { return a *= c; }
    friend AElem operator*(const AElem& a, const AElem& b);
    AElem operator-() const { return *this * Rat(-1); }
    AElem pow(unsigned k) const;

    Poly act(const Poly& p) const;

    // rebuild from raw components, normalizing each
    static AElem from_raw(int n, std::map<Degree, DiagN> raw);

private:
    void set(const Degree& alpha, DiagN d);

    int n_;
    std::map<Degree, DiagN> comps_;
};

bool eq(const AElem& a, const AElem& b);
inline AElem mul(const AElem& a, const AElem& b) { return a * b; }

// lowest relevant position per coordinate of component alpha
Degree relevant_from(const Degree& alpha);

// Named generators; coordinate indices are 1-based.
namespace gen {
AElem one(int n);
AElem x(int n, int i);
AElem y(int n, int i);
AElem H(int n, int i);
AElem Hinv(int n, int i);
AElem Hs(int n, int i, long j);  // (H_i - j)_1, j >= 1
AElem E(int n, int i, long a, long b);
AElem E(const Degree& alpha, const Degree& beta);
AElem partial(int n, int i);
AElem integ(int n, int i);
AElem p(int n, int i, long d);
AElem q(int n, int i, long d);
// sequence in slot i as a diagonal element
AElem d(int n, int i, const EvSeq& f);
}  // namespace gen

EvSeq hs_atom(long j);  // EvSeq of (H - j)_1

}  // namespace jgwa
