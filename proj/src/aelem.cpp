#include "jgwa/aelem.hpp"

#include <algorithm>
#include <sstream>

#include "jgwa/error.hpp"

namespace jgwa {

Poly monomial(const Degree& beta, const Rat& c) {
    Poly p;
    if (c != 0) p.emplace(beta, c);
    return p;
}

std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto& [beta, c] = *it;
        bool constant = std::all_of(beta.begin(), beta.end(), [](long b) { return b == 0; });
        Rat a = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (constant || a != 1) {
            os << a.get_str();
            if (!constant) os << "*";
        }
        bool star = false;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (beta[i] == 0) continue;
            if (star) os << "*";
            os << "x" << i + 1;
            if (beta[i] != 1) os << "^" << beta[i];
            star = true;
        }
    }
    return os.str();
}

Degree relevant_from(const Degree& alpha) {
    Degree lo(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) lo[i] = std::max(0L, -alpha[i]);
    return lo;
}

AElem AElem::scalar(int n, const Rat& c) { return diag(DiagN::scalar(n, c)); }

AElem AElem::diag(const DiagN& d) { return component(Degree(d.arity(), 0), d); }

AElem AElem::component(const Degree& alpha, const DiagN& d) {
    if (static_cast<int>(alpha.size()) != d.arity())
        throw Error(ErrorKind::ArityMismatch, "degree and diagonal arity differ");
    AElem a(d.arity());
    a.set(alpha, d);
    return a;
}

void AElem::set(const Degree& alpha, DiagN d) {
    Degree lo = relevant_from(alpha);
    d = d.drop_below(lo);
    if (d.is_zero(lo))
        comps_.erase(alpha);
    else
        comps_[alpha] = std::move(d);
}

AElem AElem::from_raw(int n, std::map<Degree, DiagN> raw) {
    AElem a(n);
    for (auto& [alpha, d] : raw) {
        d.normalize();
        a.set(alpha, std::move(d));
    }
    return a;
}

AElem& AElem::operator+=(const AElem& o) {
    if (o.n_ != n_) throw Error(ErrorKind::ArityMismatch, "arity mismatch in sum");
    for (const auto& [alpha, d] : o.comps_) {
        auto it = comps_.find(alpha);
        if (it == comps_.end()) {
            comps_.emplace(alpha, d);
        } else {
            DiagN s = it->second;
            s += d;
            set(alpha, std::move(s));
        }
    }
    return *this;
}

AElem& AElem::operator-=(const AElem& o) { return *this += -o; }

AElem& AElem::operator*=(const Rat& c) {
    if (c == 0) {
        comps_.clear();
        return *this;
    }
    for (auto& [alpha, d] : comps_) d *= c;
    return *this;
}

AElem operator*(const AElem& a, const AElem& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::ArityMismatch, "arity mismatch in product");
    const int n = a.n_;
    std::map<Degree, DiagN> raw;
    Degree gamma(n);
    std::vector<long> t(n);
    for (const auto& [alpha, d] : a.comps_) {
        for (const auto& [beta, e] : b.comps_) {
            // shift_alpha diag_d shift_beta diag_e
            //   = shift_{alpha+beta} mask_t diag_{d(. + beta)} diag_e
            for (int i = 0; i < n; ++i) {
                gamma[i] = alpha[i] + beta[i];
                t[i] = std::max({0L, -beta[i], -gamma[i]});
            }
            DiagN prod = (d.shift(beta) * e).masked(t);
            auto it = raw.find(gamma);
            if (it == raw.end())
                raw.emplace(gamma, std::move(prod));
            else
                it->second.append(prod);
        }
    }
    return AElem::from_raw(n, std::move(raw));
}

AElem AElem::pow(unsigned k) const {
    AElem r = scalar(n_, 1);
    AElem base = *this;
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Poly AElem::act(const Poly& p) const {
    Poly out;
    Degree target(n_);
    for (const auto& [beta, c] : p) {
        if (static_cast<int>(beta.size()) != n_) throw Error(ErrorKind::ArityMismatch, "monomial arity");
        for (const auto& [alpha, d] : comps_) {
            bool ok = true;
            for (int i = 0; i < n_ && ok; ++i) {
                target[i] = beta[i] + alpha[i];
                ok = target[i] >= 0;
            }
            if (!ok) continue;
            Rat v = d.at(beta);
            if (v == 0) continue;
            Rat& slot = out[target];
            slot += c * v;
            if (slot == 0) out.erase(target);
        }
    }
    return out;
}

bool eq(const AElem& a, const AElem& b) {
    if (a.arity() != b.arity()) throw Error(ErrorKind::ArityMismatch, "arity mismatch in eq");
    return (a - b).is_zero();
}

EvSeq hs_atom(long j) {
    if (j < 1) throw Error(ErrorKind::InvalidArgument, "(H-j)_1 needs j >= 1");
    return EvSeq(RatFunc(UPoly::linear(-j)), {{j - 1, 1}});
}

namespace gen {

namespace {
int slot_of(int n, int i) {
    if (i < 1 || i > n)
        throw Error(ErrorKind::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    return i - 1;
}
Degree unit_deg(int n, int i, long v) {
    Degree a(n, 0);
    a[slot_of(n, i)] = v;
    return a;
}
}  // namespace

AElem one(int n) { return AElem::scalar(n, 1); }
AElem x(int n, int i) { return AElem::shift(unit_deg(n, i, 1)); }
AElem y(int n, int i) { return AElem::shift(unit_deg(n, i, -1)); }
AElem d(int n, int i, const EvSeq& f) { return AElem::diag(DiagN::slot(n, slot_of(n, i), f)); }
AElem H(int n, int i) { return d(n, i, EvSeq::H()); }
AElem Hinv(int n, int i) { return d(n, i, EvSeq(RatFunc::H().inverse())); }
AElem Hs(int n, int i, long j) { return d(n, i, hs_atom(j)); }

AElem E(int n, int i, long a, long b) {
    if (a < 0 || b < 0) throw Error(ErrorKind::IndexOutOfRange, "matrix unit indices must be >= 0");
    return AElem::component(unit_deg(n, i, a - b), DiagN::slot(n, slot_of(n, i), EvSeq::delta(b)));
}

AElem E(const Degree& alpha, const Degree& beta) {
    if (alpha.size() != beta.size()) throw Error(ErrorKind::ArityMismatch, "E[alpha;beta] arity");
    int n = static_cast<int>(alpha.size());
    Degree s(n);
    std::vector<EvSeq> f;
    for (int i = 0; i < n; ++i) {
        if (alpha[i] < 0 || beta[i] < 0)
            throw Error(ErrorKind::IndexOutOfRange, "matrix unit indices must be >= 0");
        s[i] = alpha[i] - beta[i];
        f.push_back(EvSeq::delta(beta[i]));
    }
    return AElem::component(s, DiagN::pure(std::move(f)));
}

AElem partial(int n, int i) {
    return AElem::component(unit_deg(n, i, -1),
                            DiagN::slot(n, slot_of(n, i), EvSeq(RatFunc(UPoly::linear(-1)))));
}

AElem integ(int n, int i) {
    return AElem::component(unit_deg(n, i, 1), DiagN::slot(n, slot_of(n, i), EvSeq(RatFunc::H().inverse())));
}

AElem p(int n, int i, long dd) {
    EvSeq f;
    for (long j = 0; j < dd; ++j) f += EvSeq::delta(j);
    return d(n, i, f);
}

AElem q(int n, int i, long dd) { return d(n, i, EvSeq::mask_from(dd)); }

}  // namespace gen

}  // namespace jgwa
