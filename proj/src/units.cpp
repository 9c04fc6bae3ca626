#include "jgwa/units.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "jgwa/algebra.hpp"
#include "jgwa/error.hpp"

namespace jgwa {

// ---- HUnit

HUnit HUnit::atom(int n, int slot, long j, long exp) {
    HUnit u(n);
    if (exp) u.e_.at(slot)[j] = exp;
    return u;
}

HUnit HUnit::H_power(const Degree& alpha) {
    HUnit u(static_cast<int>(alpha.size()));
    for (std::size_t k = 0; k < alpha.size(); ++k)
        if (alpha[k]) u.e_[k][0] = alpha[k];
    return u;
}

void HUnit::clean() {
    for (auto& s : e_)
        for (auto it = s.begin(); it != s.end();) it = it->second == 0 ? s.erase(it) : std::next(it);
}

bool HUnit::is_identity() const {
    return std::all_of(e_.begin(), e_.end(), [](const auto& s) { return s.empty(); });
}

long HUnit::deg(int k) const {
    long d = 0;
    for (const auto& [j, e] : e_.at(k)) d += e;
    return d;
}

HUnit HUnit::operator*(const HUnit& o) const {
    if (arity() != o.arity()) throw Error(ErrorKind::ArityMismatch, "HUnit arity mismatch");
    HUnit r = *this;
    for (int k = 0; k < arity(); ++k)
        for (const auto& [j, e] : o.e_[k]) r.e_[k][j] += e;
    r.clean();
    return r;
}

HUnit HUnit::inverse() const {
    HUnit r = *this;
    for (auto& s : r.e_)
        for (auto& [j, e] : s) e = -e;
    return r;
}

HUnit HUnit::permuted(const std::vector<int>& s) const {
    HUnit r(arity());
    for (int k = 0; k < arity(); ++k) r.e_[s[k]] = e_[k];
    return r;
}

EvSeq HUnit::seq(int k) const {
    EvSeq f(1);
    for (const auto& [j, e] : e_.at(k)) {
        EvSeq a = j >= 0 ? EvSeq(RatFunc(UPoly::linear(j))) : hs_atom(-j);
        if (e < 0) a = a.inverse();
        for (long t = 0; t < std::abs(e); ++t) f *= a;
    }
    return f;
}

RatFunc HUnit::ratfunc(int k) const {
    UPoly num(1), den(1);
    for (const auto& [j, e] : e_.at(k))
        for (long t = 0; t < std::abs(e); ++t) (e > 0 ? num : den) *= UPoly::linear(j);
    return RatFunc(num, den);
}

std::string HUnit::to_string() const {
    std::ostringstream os;
    for (int k = 0; k < arity(); ++k) {
        if (k) os << " ; ";
        if (e_[k].empty()) os << "1";
        bool first = true;
        for (const auto& [j, e] : e_[k]) {
            if (!first) os << "*";
            first = false;
            std::string v = "H" + std::to_string(k + 1);
            if (j > 0) v += "+" + std::to_string(j);
            if (j < 0) v += std::to_string(j);
            os << "(" << v << ")" << (j < 0 ? "_1" : "");
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

AElem hunit_to_elem(const HUnit& u) {
    std::vector<EvSeq> f;
    for (int k = 0; k < u.arity(); ++k) f.push_back(u.seq(k));
    return AElem::diag(DiagN::pure(std::move(f)));
}

HUnit psi(const HUnit& u) {
    HUnit r(u.arity());
    for (int k = 0; k < u.arity(); ++k) {
        auto& out = r.slot(k);
        for (const auto& [j, e] : u.slot(k)) {
            out[j] -= e;
            out[j + 1] += e;
        }
    }
    return r * HUnit(u.arity());  // drops zero entries
}

HUnit psi_inv(const HUnit& u) {
    HUnit r(u.arity());
    for (int k = 0; k < u.arity(); ++k) {
        if (u.deg(k) != 0)
            throw Error(ErrorKind::NotDegreeZero,
                        "slot " + std::to_string(k + 1) + " has degree " + std::to_string(u.deg(k)));
        const auto& m = u.slot(k);
        if (m.empty()) continue;
        long lo = m.begin()->first, hi = m.rbegin()->first;
        auto& out = r.slot(k);
        // n_j = sum_{i > j} m_i, nonzero only for lo <= j < hi
        long acc = 0;
        for (long j = hi - 1; j >= lo; --j) {
            auto it = m.find(j + 1);
            if (it != m.end()) acc += it->second;
            if (acc) out[j] = acc;
        }
    }
    return r;
}

std::pair<Degree, HUnit> split_degree(const HUnit& u) {
    Degree alpha(u.arity());
    for (int k = 0; k < u.arity(); ++k) alpha[k] = u.deg(k);
    return {alpha, u * HUnit::H_power(alpha).inverse()};
}

// ---- FinMat

void FinMat::add(const Degree& a, const Degree& b, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(a, b);
    Rat& v = entries[key];
    v += c;
    if (v == 0) entries.erase(key);
}

namespace {

std::vector<Degree> support(const FinMat& m) {
    std::set<Degree> s;
    for (const auto& [ab, c] : m.entries) {
        s.insert(ab.first);
        s.insert(ab.second);
    }
    return {s.begin(), s.end()};
}

std::vector<std::vector<Rat>> block(const FinMat& m, const std::vector<Degree>& S) {
    std::map<Degree, std::size_t> idx;
    for (std::size_t i = 0; i < S.size(); ++i) idx[S[i]] = i;
    std::vector<std::vector<Rat>> A(S.size(), std::vector<Rat>(S.size()));
    for (std::size_t i = 0; i < S.size(); ++i) A[i][i] = 1;
    for (const auto& [ab, c] : m.entries) A[idx[ab.first]][idx[ab.second]] += c;
    return A;
}

}  // namespace

Rat det1p(const FinMat& m) {
    auto S = support(m);
    auto A = block(m, S);
    const std::size_t k = S.size();
    // Bareiss elimination
    Rat prev(1);
    int sign = 1;
    for (std::size_t p = 0; p < k; ++p) {
        if (A[p][p] == 0) {
            std::size_t r = p + 1;
            while (r < k && A[r][p] == 0) ++r;
            if (r == k) return 0;
            std::swap(A[p], A[r]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) A[i][j] = (A[i][j] * A[p][p] - A[i][p] * A[p][j]) / prev;
            A[i][p] = 0;
        }
        prev = A[p][p];
    }
    return k ? Rat(sign * prev) : Rat(1);
}

FinMat inv1p(const FinMat& m) {
    auto S = support(m);
    auto A = block(m, S);
    const std::size_t k = S.size();
    std::vector<std::vector<Rat>> B(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i) B[i][i] = 1;
    for (std::size_t p = 0; p < k; ++p) {
        std::size_t r = p;
        while (r < k && A[r][p] == 0) ++r;
        if (r == k) throw Error(ErrorKind::NotInvertible, "1 + m has determinant 0");
        std::swap(A[p], A[r]);
        std::swap(B[p], B[r]);
        Rat inv = 1 / A[p][p];
        for (std::size_t j = 0; j < k; ++j) {
            A[p][j] *= inv;
            B[p][j] *= inv;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (i == p || A[i][p] == 0) continue;
            Rat f = A[i][p];
            for (std::size_t j = 0; j < k; ++j) {
                A[i][j] -= f * A[p][j];
                B[i][j] -= f * B[p][j];
            }
        }
    }
    FinMat out;
    out.n = m.n;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) out.add(S[i], S[j], B[i][j] - (i == j ? 1 : 0));
    return out;
}

AElem finmat_to_elem(const FinMat& m) {
    std::map<Degree, DiagN> raw;
    for (const auto& [ab, c] : m.entries) {
        const auto& [a, b] = ab;
        Degree s(m.n);
        std::vector<EvSeq> f;
        for (int i = 0; i < m.n; ++i) {
            s[i] = a[i] - b[i];
            f.push_back(EvSeq::delta(b[i]));
        }
        raw[s].append(DiagN::pure(std::move(f), c));
    }
    return AElem::from_raw(m.n, std::move(raw));
}

std::optional<FinMat> elem_to_finmat(const AElem& a) {
    const int n = a.arity();
    FinMat out;
    out.n = n;
    for (const auto& [alpha, d] : a.comps()) {
        Degree lo = relevant_from(alpha), hi(n);
        for (int i = 0; i < n; ++i) hi[i] = std::max(lo[i], d.exc_end(i));
        DiagN rest = d;
        Degree k = lo;
        bool empty_box = false;
        for (int i = 0; i < n; ++i) empty_box = empty_box || hi[i] <= lo[i];
        while (!empty_box) {
            Rat v = d.at(k);
            if (v != 0) {
                std::vector<EvSeq> f;
                Degree row(n);
                for (int i = 0; i < n; ++i) {
                    f.push_back(EvSeq::delta(k[i]));
                    row[i] = k[i] + alpha[i];
                }
                rest.append(DiagN::pure(std::move(f), -v));
                out.add(row, k, v);
            }
            int i = 0;
            while (i < n && ++k[i] >= hi[i]) k[i] = lo[i], ++i;
            if (i == n) break;
        }
        rest.normalize();
        if (!rest.is_zero(lo)) return std::nullopt;
    }
    return out;
}

FinMat finmat_compose(const FinMat& a, const FinMat& b) {
    FinMat out;
    out.n = a.n;
    for (const auto& [ab, c] : a.entries) out.add(ab.first, ab.second, c);
    for (const auto& [ab, c] : b.entries) out.add(ab.first, ab.second, c);
    for (const auto& [ab1, c1] : a.entries)
        for (const auto& [ab2, c2] : b.entries)
            if (ab1.second == ab2.first) out.add(ab1.first, ab2.second, c1 * c2);
    return out;
}

// ---- UnitElem

UnitElem UnitElem::identity(int n) { return {1, HUnit(n), gen::one(n), gen::one(n)}; }

UnitElem UnitElem::from_finmat(const FinMat& m) {
    FinMat mi = inv1p(m);
    return {1, HUnit(m.n), gen::one(m.n) + finmat_to_elem(m), gen::one(m.n) + finmat_to_elem(mi)};
}

AElem UnitElem::elem() const { return hunit_to_elem(h) * w * scalar; }

AElem UnitElem::inverse_elem() const { return w_inv * hunit_to_elem(h.inverse()) * Rat(1 / scalar); }

bool UnitElem::certify() const {
    const int n = w.arity();
    AElem one = gen::one(n);
    return scalar != 0 && eq(w * w_inv, one) && eq(w_inv * w, one) && quotient(w - one).is_zero();
}

UnitElem unit_decompose(const AElem& a) {
    if (a.arity() != 1) throw Error(ErrorKind::ArityMismatch, "unit_decompose is defined for n = 1");
    QElem q = quotient(a);
    if (q.comps().size() != 1 || q.comps().begin()->first[0] != 0)
        throw Error(ErrorKind::NotUnit, "image modulo F is not of x-degree 0", "NonZeroDegree");
    RatFunc r;
    q.comps().begin()->second.as_univariate(0, r);
    HUnit h(1);
    long found = 0;
    for (auto [x, m] : r.num().integer_roots()) {
        h.slot(0)[-x] += m;
        found += m;
    }
    if (found != r.num().degree())
        throw Error(ErrorKind::NotUnit, "numerator has non-integer roots", "NonIntegerRoots");
    found = 0;
    for (auto [x, m] : r.den().integer_roots()) {
        h.slot(0)[-x] -= m;
        found += m;
    }
    if (found != r.den().degree())
        throw Error(ErrorKind::NotUnit, "denominator has non-integer roots", "NonIntegerRoots");
    h = h * HUnit(1);
    Rat lambda = r.num().lead();
    AElem one = gen::one(1);
    AElem w = hunit_to_elem(h.inverse()) * a * Rat(1 / lambda);
    auto f = elem_to_finmat(w - one);
    if (!f) throw Error(ErrorKind::NotUnit, "residue does not lie in F", "ResidueNotInF");
    if (det1p(*f) == 0) throw Error(ErrorKind::NotUnit, "residue has determinant 0", "ZeroDeterminant");
    return {lambda, h, w, one + finmat_to_elem(inv1p(*f))};
}

}  // namespace jgwa
