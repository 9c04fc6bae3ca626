#pragma once

#include <string>
#include <vector>

#include "jgwa/evseq.hpp"

namespace jgwa {

struct DiagTerm {
    Rat c;
    std::vector<EvSeq> f;  // one factor per coordinate
};

// Function N^n -> Q given as a sum of pure tensors of EvSeq. Not canonical for n >= 2;
// normalize() merges what it can and for n = 1 collapses to a single term.
class DiagN {
public:
    DiagN() = default;
    explicit DiagN(int n) : n_(n) {}

    static DiagN scalar(int n, const Rat& c);
    static DiagN one(int n) { return scalar(n, 1); }
    // factor d in coordinate i (0-based), 1 elsewhere
    static DiagN slot(int n, int i, const EvSeq& d);
    static DiagN pure(std::vector<EvSeq> f, const Rat& c = 1);

    int arity() const { return n_; }
    const std::vector<DiagTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Rat at(const std::vector<long>& k) const;
    // zero on { k : k_i >= lo_i }; an empty lo means all of N^n
    bool is_zero(const std::vector<long>& lo = {}) const;

    // concatenate terms without normalizing; call normalize() afterwards
    void append(const DiagN& o);
    DiagN& operator+=(const DiagN& o);
    DiagN& operator-=(const DiagN& o);
    DiagN& operator*=(const Rat& c);
    friend DiagN operator+(DiagN a, const DiagN& b) { return a += b; }
    friend DiagN operator-(DiagN a, const DiagN& b) { return a -= b; }
    friend DiagN operator*(DiagN a, const Rat& c) { return a *= c; }
    friend DiagN operator*(const DiagN& a, const DiagN& b);

    // each coordinate i: k_i -> k_i + s_i
    DiagN shift(const std::vector<long>& s) const;
    // multiply coordinate i by mask_from(t_i)
    DiagN masked(const std::vector<long>& t) const;
    DiagN drop_below(const std::vector<long>& lo) const;
    // transform every factor in slot i
    template <class F>
    DiagN map_slot(int i, F fn) const {
        DiagN out(n_);
        for (const auto& t : terms_) {
            DiagTerm u = t;
            u.f[i] = fn(t.f[i]);
            out.terms_.push_back(std::move(u));
        }
        out.normalize();
        return out;
    }
    DiagN permuted(const std::vector<int>& s) const;  // slot i -> slot s[i]

    void normalize();
    bool has_exceptions() const;
    // 1 + largest exception position in slot i over all terms
    long exc_end(int i) const;
    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<DiagTerm> terms_;
};

inline bool diag_is_zero(const DiagN& d) { return d.is_zero(); }

}  // namespace jgwa
