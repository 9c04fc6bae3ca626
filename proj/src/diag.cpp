#include "jgwa/diag.hpp"

#include <algorithm>
#include <sstream>

#include "jgwa/error.hpp"
#include "tensor_merge.hpp"

namespace jgwa {


DiagN DiagN::scalar(int n, const Rat& c) {
    DiagN d(n);
    if (c != 0) d.terms_.push_back({c, std::vector<EvSeq>(n, EvSeq(1))});
    return d;
}

DiagN DiagN::slot(int n, int i, const EvSeq& f) {
    if (i < 0 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "slot out of range");
    DiagN d(n);
    d.terms_.push_back({1, std::vector<EvSeq>(n, EvSeq(1))});
    d.terms_[0].f[i] = f;
    d.normalize();
    return d;
}

DiagN DiagN::pure(std::vector<EvSeq> f, const Rat& c) {
    DiagN d(static_cast<int>(f.size()));
    d.terms_.push_back({c, std::move(f)});
    d.normalize();
    return d;
}

Rat DiagN::at(const std::vector<long>& k) const {
    Rat s(0);
    for (const auto& t : terms_) {
        Rat p = t.c;
        for (int i = 0; i < n_ && p != 0; ++i) p *= t.f[i].at(k[i]);
        s += p;
    }
    return s;
}

long DiagN::exc_end(int i) const {
    long m = 0;
    for (const auto& t : terms_) m = std::max(m, t.f[i].exc_end());
    return m;
}

bool DiagN::has_exceptions() const {
    for (const auto& t : terms_)
        for (const auto& f : t.f)
            if (!f.exc().empty()) return true;
    return false;
}

bool DiagN::is_zero(const std::vector<long>& lo_in) const {
    if (terms_.empty()) return true;
    std::vector<long> lo = lo_in.empty() ? std::vector<long>(n_, 0) : lo_in;
    const std::size_t T = terms_.size();
    // vals[i][t][k - lo_i]
    std::vector<std::vector<std::vector<Rat>>> vals(n_);
    for (int i = 0; i < n_; ++i) {
        long M = std::max(lo[i], exc_end(i));
        // degree bound of the cleared numerator beyond the exceptions
        UPoly L(1);
        int top = 0;
        bool any = false;
        for (const auto& t : terms_) {
            const RatFunc& r = t.f[i].r();
            if (r.is_zero()) continue;
            if (!any || r.degree() > top) top = r.degree();
            any = true;
            if (r.den().degree() > 0) {
                UPoly g = UPoly::gcd(L, r.den());
                L = UPoly::divmod(L * r.den(), g).first;
            }
        }
        long D = any ? top + L.degree() : 0;
        if (D < 0) D = 0;
        long hi = M + D;
        vals[i].resize(T);
        for (std::size_t t = 0; t < T; ++t) {
            auto& v = vals[i][t];
            v.reserve(hi - lo[i] + 1);
            for (long k = lo[i]; k <= hi; ++k) v.push_back(terms_[t].f[i].at(k));
        }
    }
    // depth-first over the grid carrying partial products
    std::vector<std::vector<Rat>> partial(n_ + 1, std::vector<Rat>(T));
    for (std::size_t t = 0; t < T; ++t) partial[0][t] = terms_[t].c;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n_) {
            Rat s(0);
            for (std::size_t t = 0; t < T; ++t) s += partial[n_][t];
            return s == 0;
        }
        std::size_t len = vals[i][0].size();
        for (std::size_t k = 0; k < len; ++k) {
            bool all_zero = true;
            for (std::size_t t = 0; t < T; ++t) {
                if (partial[i][t] == 0 || vals[i][t][k] == 0) {
                    partial[i + 1][t] = 0;
                } else {
                    partial[i + 1][t] = partial[i][t] * vals[i][t][k];
                    all_zero = false;
                }
            }
            if (!all_zero && !self(self, i + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

void DiagN::append(const DiagN& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != n_) throw Error(ErrorKind::ArityMismatch, "diagonal arity mismatch");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
}

DiagN& DiagN::operator+=(const DiagN& o) {
    if (n_ == 0) n_ = o.n_;
    if (o.n_ != n_) throw Error(ErrorKind::ArityMismatch, "diagonal arity mismatch");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

DiagN& DiagN::operator-=(const DiagN& o) { return *this += o * Rat(-1); }

DiagN& DiagN::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= c;
    return *this;
}

DiagN operator*(const DiagN& a, const DiagN& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::ArityMismatch, "diagonal arity mismatch");
    DiagN out(a.n_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            DiagTerm u{s.c * t.c, s.f};
            bool zero = false;
            for (int i = 0; i < a.n_ && !zero; ++i) {
                u.f[i] *= t.f[i];
                zero = u.f[i].is_zero();
            }
            if (!zero) out.terms_.push_back(std::move(u));
        }
    out.normalize();
    return out;
}

DiagN DiagN::shift(const std::vector<long>& s) const {
    DiagN out(n_);
    for (const auto& t : terms_) {
        DiagTerm u{t.c, {}};
        u.f.reserve(n_);
        for (int i = 0; i < n_; ++i) u.f.push_back(t.f[i].shift(s[i]));
        out.terms_.push_back(std::move(u));
    }
    out.normalize();
    return out;
}

DiagN DiagN::masked(const std::vector<long>& tvec) const {
    bool trivial = std::all_of(tvec.begin(), tvec.end(), [](long t) { return t <= 0; });
    if (trivial) return *this;
    DiagN out(n_);
    for (const auto& t : terms_) {
        DiagTerm u = t;
        for (int i = 0; i < n_; ++i)
            if (tvec[i] > 0) u.f[i] *= EvSeq::mask_from(tvec[i]);
        out.terms_.push_back(std::move(u));
    }
    out.normalize();
    return out;
}

DiagN DiagN::drop_below(const std::vector<long>& lo) const {
    DiagN out(n_);
    for (const auto& t : terms_) {
        DiagTerm u = t;
        for (int i = 0; i < n_; ++i) u.f[i] = u.f[i].drop_below(lo[i]);
        out.terms_.push_back(std::move(u));
    }
    out.normalize();
    return out;
}

DiagN DiagN::permuted(const std::vector<int>& s) const {
    DiagN out(n_);
    for (const auto& t : terms_) {
        DiagTerm u{t.c, std::vector<EvSeq>(n_)};
        for (int i = 0; i < n_; ++i) u.f[s[i]] = t.f[i];
        out.terms_.push_back(std::move(u));
    }
    out.normalize();
    return out;
}

void DiagN::normalize() { terms_ = detail::merge_terms(n_, std::move(terms_)); }

std::string DiagN::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        if (t) os << " + ";
        os << terms_[t].c.get_str();
        for (int i = 0; i < n_; ++i)
            if (!terms_[t].f[i].is_one()) os << "*D" << i + 1 << "[" << terms_[t].f[i].to_string() << "]";
    }
    return os.str();
}

}  // namespace jgwa
