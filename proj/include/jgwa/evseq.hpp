#pragma once

#include <map>
#include <string>

#include "jgwa/upoly.hpp"

namespace jgwa {

// Eventually rational sequence N -> Q: value at k is exc[k] if present, else r(k+1).
// Canonical: every pole of r on the positive integers is covered by exc, and no
// exception repeats the value r would give.
class EvSeq {
public:
    EvSeq() = default;
    EvSeq(const Rat& c) : r_(c) {}  // NOLINT(implicit)
    EvSeq(long c) : r_(Rat(c)) {}  // NOLINT(implicit)
    EvSeq(RatFunc r, std::map<long, Rat> exc = {});

    static EvSeq delta(long k);      // E_kk
    static EvSeq mask_from(long t);  // 1 on k >= t, 0 below
    static EvSeq H() { return EvSeq(RatFunc::H()); }

    const RatFunc& r() const { return r_; }
    const std::map<long, Rat>& exc() const { return exc_; }

    Rat at(long k) const;
    bool is_zero() const { return r_.is_zero() && exc_.empty(); }
    bool is_one() const { return exc_.empty() && r_ == RatFunc(1); }
    // one past the largest exception position, 0 if none
    long exc_end() const { return exc_.empty() ? 0 : exc_.rbegin()->first + 1; }

    // d'(k) = d(k+s); for s < 0 the first -s values are 0
    EvSeq shift(long s) const;
    EvSeq sigma() const { return shift(-1); }
    EvSeq tau() const { return shift(1); }
    // forget values below lo (pole positions keep a 0)
    EvSeq drop_below(long lo) const;
    EvSeq inverse() const;

    EvSeq& operator+=(const EvSeq& o);
    EvSeq& operator-=(const EvSeq& o);
    EvSeq& operator*=(const EvSeq& o);
    EvSeq& operator*=(const Rat& c);
    friend EvSeq operator+(EvSeq a, const EvSeq& b) { return a += b; }
    friend EvSeq operator-(EvSeq a, const EvSeq& b) { return a -= b; }
    friend EvSeq operator*(EvSeq a, const EvSeq& b) { return a *= b; }
    friend EvSeq operator*(EvSeq a, const Rat& c) { return a *= c; }
    EvSeq operator-() const { return *this * Rat(-1); }
    friend bool operator==(const EvSeq& a, const EvSeq& b) {
        return a.r_ == b.r_ && a.exc_ == b.exc_;
    }

    std::string to_string() const;

private:
    void canonicalize();
    template <class Op>
    static EvSeq combine(const EvSeq& a, const EvSeq& b, RatFunc r, Op op);

    RatFunc r_;
    std::map<long, Rat> exc_;
};

int compare(const EvSeq& a, const EvSeq& b);

inline Rat evseq_at(const EvSeq& d, long k) { return d.at(k); }
inline EvSeq evseq_add(const EvSeq& a, const EvSeq& b) { return a + b; }
inline EvSeq evseq_mul(const EvSeq& a, const EvSeq& b) { return a * b; }
inline EvSeq evseq_sigma(const EvSeq& d) { return d.sigma(); }
inline EvSeq evseq_tau(const EvSeq& d) { return d.tau(); }

}  // namespace jgwa
