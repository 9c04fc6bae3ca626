#pragma once

#include <map>
#include <string>
#include <vector>

#include "jgwa/aelem.hpp"

namespace jgwa {

struct RTerm {
    Rat c;
    std::vector<RatFunc> f;
};

// Sum of pure tensors of rational functions in H_1..H_n.
class RatTensor {
public:
    RatTensor() = default;
    explicit RatTensor(int n) : n_(n) {}
    static RatTensor scalar(int n, const Rat& c);
    static RatTensor slot(int n, int i, const RatFunc& f);

    int arity() const { return n_; }
    const std::vector<RTerm>& terms() const { return terms_; }
    bool is_zero() const;

    RatTensor& operator+=(const RatTensor& o);
    friend RatTensor operator+(RatTensor a, const RatTensor& b) { return a += b; }
    friend RatTensor operator-(RatTensor a, const RatTensor& b);
    friend RatTensor operator*(const RatTensor& a, const RatTensor& b);
    RatTensor shift(const std::vector<long>& s) const;
    RatTensor permuted(const std::vector<int>& s) const;
    void append(const RTerm& t) { terms_.push_back(t); }
    void normalize();

    // collapse to a function of slot i alone; false if it depends on another slot
    bool as_univariate(int i, RatFunc& out) const;
    std::string to_string() const;

private:
    int n_ = 0;
    std::vector<RTerm> terms_;
};

// Class in the skew Laurent ring A_n / a_n: sum_alpha x^alpha f_alpha(H).
class QElem {
public:
    explicit QElem(int n = 1) : n_(n) {}
    static QElem component(const Degree& alpha, RatTensor f);

    int arity() const { return n_; }
    const std::map<Degree, RatTensor>& comps() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }

    QElem& operator+=(const QElem& o);
    friend QElem operator+(QElem a, const QElem& b) { return a += b; }
    friend QElem operator-(const QElem& a, const QElem& b);
    friend QElem operator*(const QElem& a, const QElem& b);
    friend bool operator==(const QElem& a, const QElem& b) { return (a - b).is_zero(); }

    std::string to_string() const;

private:
    int n_;
    std::map<Degree, RatTensor> comps_;
};

QElem quotient(const AElem& a);
long index(const AElem& a);
long index_oracle(const AElem& a, long N = 10, long cap = 64);

AElem eta(const AElem& a);
AElem theta(const AElem& a);

// x_i -> x_i u_i, y_i -> u_i^{-1} y_i, identity on the diagonal; u and uinv per slot
AElem twist(const AElem& a, const std::vector<EvSeq>& u, const std::vector<EvSeq>& uinv);

bool in_Sn(const AElem& a);
std::vector<AElem> annihilator_basis(int n, int i, long m);

}  // namespace jgwa
