#include "jgwa/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "jgwa/error.hpp"
#include "tensor_merge.hpp"

namespace jgwa {

// ---- RatTensor

RatTensor RatTensor::scalar(int n, const Rat& c) {
    RatTensor t(n);
    if (c != 0) t.terms_.push_back({c, std::vector<RatFunc>(n, RatFunc(1))});
    return t;
}

RatTensor RatTensor::slot(int n, int i, const RatFunc& f) {
    RatTensor t = scalar(n, 1);
    t.terms_[0].f[i] = f;
    t.normalize();
    return t;
}

void RatTensor::normalize() { terms_ = detail::merge_terms(n_, std::move(terms_)); }

namespace {

// n+1 integer points avoiding the roots of L
std::vector<Rat> sample_points(const UPoly& L, long count) {
    std::vector<Rat> pts;
    for (long h = 1; static_cast<long>(pts.size()) < count; ++h)
        if (L(Rat(h)) != 0) pts.emplace_back(h);
    return pts;
}

}  // namespace

bool RatTensor::is_zero() const {
    if (terms_.empty()) return true;
    const std::size_t T = terms_.size();
    std::vector<std::vector<std::vector<Rat>>> vals(n_);
    for (int i = 0; i < n_; ++i) {
        UPoly L(1);
        int top = 0;
        bool any = false;
        for (const auto& t : terms_) {
            const RatFunc& r = t.f[i];
            if (r.is_zero()) continue;
            if (!any || r.degree() > top) top = r.degree();
            any = true;
            if (r.den().degree() > 0) {
                UPoly g = UPoly::gcd(L, r.den());
                L = UPoly::divmod(L * r.den(), g).first;
            }
        }
        long D = std::max(0L, any ? static_cast<long>(top + L.degree()) : 0L);
        auto pts = sample_points(L, D + 1);
        vals[i].resize(T);
        for (std::size_t t = 0; t < T; ++t)
            for (const auto& h : pts) vals[i][t].push_back(*terms_[t].f[i].eval(h));
    }
    std::vector<std::vector<Rat>> partial(n_ + 1, std::vector<Rat>(T));
    for (std::size_t t = 0; t < T; ++t) partial[0][t] = terms_[t].c;
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == n_) {
            Rat s(0);
            for (std::size_t t = 0; t < T; ++t) s += partial[n_][t];
            return s == 0;
        }
        for (std::size_t k = 0; k < vals[i][0].size(); ++k) {
            for (std::size_t t = 0; t < T; ++t) partial[i + 1][t] = partial[i][t] * vals[i][t][k];
            if (!self(self, i + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

RatTensor& RatTensor::operator+=(const RatTensor& o) {
    if (n_ == 0) n_ = o.n_;
    if (n_ != o.n_) throw Error(ErrorKind::ArityMismatch, "tensor arity mismatch");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    normalize();
    return *this;
}

RatTensor operator-(RatTensor a, const RatTensor& b) {
    RatTensor nb = b;
    for (auto& t : nb.terms_) t.c = -t.c;
    return a += nb;
}

RatTensor operator*(const RatTensor& a, const RatTensor& b) {
    RatTensor out(a.n_);
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) {
            RTerm u{s.c * t.c, s.f};
            for (int i = 0; i < a.n_; ++i) u.f[i] *= t.f[i];
            out.terms_.push_back(std::move(u));
        }
    out.normalize();
    return out;
}

RatTensor RatTensor::shift(const std::vector<long>& s) const {
    RatTensor out(n_);
    for (const auto& t : terms_) {
        RTerm u = t;
        for (int i = 0; i < n_; ++i) u.f[i] = u.f[i].shifted(s[i]);
        out.terms_.push_back(std::move(u));
    }
    out.normalize();
    return out;
}

RatTensor RatTensor::permuted(const std::vector<int>& s) const {
    RatTensor out(n_);
    for (const auto& t : terms_) {
        RTerm u{t.c, std::vector<RatFunc>(n_)};
        for (int i = 0; i < n_; ++i) u.f[s[i]] = t.f[i];
        out.terms_.push_back(std::move(u));
    }
    out.normalize();
    return out;
}

bool RatTensor::as_univariate(int i, RatFunc& out) const {
    std::vector<Rat> at(n_);
    for (int j = 0; j < n_; ++j) {
        if (j == i) continue;
        UPoly L(1);
        for (const auto& t : terms_) L *= t.f[j].den();
        at[j] = sample_points(L, 1)[0];
    }
    RatFunc acc;
    for (const auto& t : terms_) {
        Rat c = t.c;
        for (int j = 0; j < n_; ++j)
            if (j != i) c *= *t.f[j].eval(at[j]);
        acc += t.f[i] * RatFunc(c);
    }
    if (!(*this - slot(n_, i, acc)).is_zero()) return false;
    out = acc;
    return true;
}

std::string RatTensor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        if (t) os << " + ";
        os << terms_[t].c.get_str();
        for (int i = 0; i < n_; ++i) {
            if (terms_[t].f[i] == RatFunc(1)) continue;
            os << "*" << terms_[t].f[i].to_string("H" + std::to_string(i + 1));
        }
    }
    return os.str();
}

// ---- QElem

QElem QElem::component(const Degree& alpha, RatTensor f) {
    QElem q(static_cast<int>(alpha.size()));
    f.normalize();
    if (!f.is_zero()) q.comps_.emplace(alpha, std::move(f));
    return q;
}

QElem& QElem::operator+=(const QElem& o) {
    if (n_ != o.n_) throw Error(ErrorKind::ArityMismatch, "quotient arity mismatch");
    for (const auto& [alpha, f] : o.comps_) {
        auto it = comps_.find(alpha);
        if (it == comps_.end()) {
            comps_.emplace(alpha, f);
            continue;
        }
        it->second += f;
        if (it->second.is_zero()) comps_.erase(it);
    }
    return *this;
}

QElem operator-(const QElem& a, const QElem& b) {
    QElem nb = b;
    for (auto& [alpha, f] : nb.comps_) f = RatTensor::scalar(f.arity(), -1) * f;
    return a + nb;
}

QElem operator*(const QElem& a, const QElem& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::ArityMismatch, "quotient arity mismatch");
    std::map<Degree, RatTensor> raw;
    for (const auto& [alpha, f] : a.comps_)
        for (const auto& [beta, g] : b.comps_) {
            Degree gamma(a.n_);
            for (int i = 0; i < a.n_; ++i) gamma[i] = alpha[i] + beta[i];
            // x^alpha f x^beta g = x^(alpha+beta) f(H+beta) g
            RatTensor p = f.shift(beta) * g;
            auto it = raw.find(gamma);
            if (it == raw.end())
                raw.emplace(gamma, std::move(p));
            else
                for (const auto& t : p.terms()) it->second.append(t);
        }
    QElem out(a.n_);
    for (auto& [gamma, f] : raw) {
        f.normalize();
        if (!f.is_zero()) out.comps_.emplace(gamma, std::move(f));
    }
    return out;
}

std::string QElem::to_string() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, f] : comps_) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        for (int i = 0; i < n_; ++i) {
            if (alpha[i] == 0) continue;
            if (any) os << "*";
            os << "x" << i + 1;
            if (alpha[i] != 1) os << "^" << alpha[i];
            any = true;
        }
        if (any) os << "*";
        os << "(" << f.to_string() << ")";
    }
    return os.str();
}

QElem quotient(const AElem& a) {
    QElem out(a.arity());
    for (const auto& [alpha, d] : a.comps()) {
        RatTensor f(a.arity());
        for (const auto& t : d.terms()) {
            RTerm u{t.c, {}};
            for (const auto& e : t.f) u.f.push_back(e.r());
            f.append(u);
        }
        out += QElem::component(alpha, std::move(f));
    }
    return out;
}

// ---- index

long index(const AElem& a) {
    if (a.arity() != 1) throw Error(ErrorKind::ArityMismatch, "index is defined for n = 1");
    QElem q = quotient(a);
    if (q.is_zero()) throw Error(ErrorKind::NotFredholm, "element lies in F");
    return -q.comps().rbegin()->first[0];
}

namespace {

long rank(std::vector<std::vector<Rat>> m) {
    long r = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j)
                if (m[r][j] != 0) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace

long index_oracle(const AElem& a, long N, long cap) {
    if (a.arity() != 1) throw Error(ErrorKind::ArityMismatch, "index_oracle is defined for n = 1");
    long top = 0;
    for (const auto& [alpha, d] : a.comps()) top = std::max(top, alpha[0]);
    // dim ker on P_{<=N}; codim of Im(a) within P_{<=N} using inputs up to degree 2N
    auto stats = [&](long n) {
        long cols = 2 * n + 1, rows = 2 * n + top + 1;
        std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
        for (long k = 0; k < cols; ++k)
            for (const auto& [beta, c] : a.act(monomial({k}))) m[beta[0]][k] = c;
        std::vector<std::vector<Rat>> low(rows), high;
        for (long r = 0; r < rows; ++r) {
            low[r].assign(m[r].begin(), m[r].begin() + n + 1);
            if (r > n) high.push_back(m[r]);
        }
        long ker = (n + 1) - rank(low);
        long in_low = rank(m) - rank(high);
        return std::pair<long, long>(ker, (n + 1) - in_low);
    };
    auto prev = stats(N);
    for (long n = N + 1; n <= cap; ++n) {
        auto cur = stats(n);
        if (cur == prev) return cur.first - cur.second;
        prev = cur;
    }
    throw Error(ErrorKind::NoStabilization, "index did not stabilize by N = " + std::to_string(cap));
}

// ---- involutions and twists

AElem eta(const AElem& a) {
    AElem out(a.arity());
    for (const auto& [alpha, d] : a.comps()) {
        Degree neg(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) neg[i] = -alpha[i];
        out += AElem::diag(d) * AElem::shift(neg);
    }
    return out;
}

AElem twist(const AElem& a, const std::vector<EvSeq>& u, const std::vector<EvSeq>& uinv) {
    const int n = a.arity();
    std::map<std::pair<int, long>, EvSeq> cache;
    auto cocycle = [&](int i, long m) -> const EvSeq& {
        auto key = std::make_pair(i, m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        EvSeq f(1);
        if (m >= 0)
            for (long j = 0; j < m; ++j) f *= u[i].shift(j);
        else
            for (long j = 1; j <= -m; ++j) f *= uinv[i].shift(-j);
        return cache.emplace(key, std::move(f)).first->second;
    };
    std::map<Degree, DiagN> raw;
    for (const auto& [alpha, d] : a.comps()) {
        std::vector<EvSeq> f;
        for (int i = 0; i < n; ++i) f.push_back(cocycle(i, alpha[i]));
        raw.emplace(alpha, DiagN::pure(std::move(f)) * d);
    }
    return AElem::from_raw(n, std::move(raw));
}

AElem theta(const AElem& a) {
    const int n = a.arity();
    std::vector<EvSeq> u(n, EvSeq::H()), uinv(n, EvSeq(RatFunc::H().inverse()));
    return eta(twist(a, u, uinv));
}

bool in_Sn(const AElem& a) {
    for (const auto& [alpha, d] : a.comps())
        for (const auto& t : d.terms())
            for (const auto& f : t.f)
                if (!f.r().is_constant()) return false;
    return true;
}

std::vector<AElem> annihilator_basis(int n, int i, long m) {
    std::vector<AElem> out;
    for (long j = 0; j < m; ++j) out.push_back(gen::E(n, i, j, 0));
    return out;
}

}  // namespace jgwa
