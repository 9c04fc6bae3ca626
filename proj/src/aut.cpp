#include "jgwa/aut.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jgwa/algebra.hpp"
#include "jgwa/error.hpp"

namespace jgwa {

Perm perm_inverse(const Perm& s) {
    Perm r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[s[i]] = static_cast<int>(i);
    return r;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

bool is_perm(const Perm& s) {
    std::vector<bool> seen(s.size());
    for (int v : s) {
        if (v < 0 || v >= static_cast<int>(s.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

namespace {

Perm identity_perm(int n) {
    Perm s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

void check_arity(const Aut& s, const AElem& a) {
    if (s.n != a.arity()) throw Error(ErrorKind::ArityMismatch, "automorphism and element arity differ");
}

}  // namespace

Aut Aut::identity(int n) { return {n, identity_perm(n), std::vector<Rat>(n, Rat(1)), HUnit(n), UnitElem::identity(n)}; }

Aut Aut::perm(const Perm& s) {
    if (!is_perm(s)) throw Error(ErrorKind::InvalidArgument, "not a permutation");
    Aut a = identity(static_cast<int>(s.size()));
    a.s = s;
    return a;
}

Aut Aut::torus(const std::vector<Rat>& lambda) {
    for (const auto& l : lambda)
        if (l == 0) throw Error(ErrorKind::InvalidArgument, "torus entries must be nonzero");
    Aut a = identity(static_cast<int>(lambda.size()));
    a.lambda = lambda;
    return a;
}

Aut Aut::mu(const HUnit& u) {
    Aut a = identity(u.arity());
    a.u = u;
    return a;
}

Aut Aut::omega(const UnitElem& phi) {
    if (phi.scalar != 1 || !phi.h.is_identity())
        throw Error(ErrorKind::InvalidArgument, "omega needs a unit congruent to 1");
    Aut a = identity(phi.w.arity());
    a.phi = phi;
    return a;
}

Aut Aut::eta_theta(int n, int i) { return mu(HUnit::atom(n, i - 1, 0)); }

AElem apply_perm(const Perm& s, const AElem& a) {
    std::map<Degree, DiagN> raw;
    for (const auto& [alpha, d] : a.comps()) {
        Degree b(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) b[s[i]] = alpha[i];
        raw.emplace(b, d.permuted(s));
    }
    return AElem::from_raw(a.arity(), std::move(raw));
}

AElem apply_torus(const std::vector<Rat>& lambda, const AElem& a) {
    AElem out(a.arity());
    for (const auto& [alpha, d] : a.comps()) {
        Rat c(1);
        for (std::size_t i = 0; i < alpha.size(); ++i) c *= rat_pow(lambda[i], alpha[i]);
        out += AElem::component(alpha, d * c);
    }
    return out;
}

AElem apply_mu(const HUnit& u, const AElem& a) {
    if (u.is_identity()) return a;
    std::vector<EvSeq> f, finv;
    HUnit ui = u.inverse();
    for (int k = 0; k < u.arity(); ++k) {
        f.push_back(u.seq(k));
        finv.push_back(ui.seq(k));
    }
    return twist(a, f, finv);
}

namespace {

AElem apply_omega(const UnitElem& phi, const AElem& a) { return phi.w * a * phi.w_inv; }

// (s t_lambda mu_u)^{-1}
AElem apply_g_inverse(const Aut& g, const AElem& a) {
    std::vector<Rat> li;
    for (const auto& l : g.lambda) li.push_back(1 / l);
    return apply_mu(g.u.inverse(), apply_torus(li, apply_perm(perm_inverse(g.s), a)));
}

AElem apply_g(const Aut& g, const AElem& a) { return apply_perm(g.s, apply_torus(g.lambda, apply_mu(g.u, a))); }

}  // namespace

AElem apply(const Aut& sigma, const AElem& a) {
    check_arity(sigma, a);
    return apply_g(sigma, apply_omega(sigma.phi, a));
}

Aut compose(const Aut& a, const Aut& b) {
    if (a.n != b.n) throw Error(ErrorKind::ArityMismatch, "automorphism arity mismatch");
    Aut r;
    r.n = a.n;
    r.s = perm_compose(a.s, b.s);
    r.lambda.resize(a.n);
    for (int i = 0; i < a.n; ++i) r.lambda[i] = a.lambda[b.s[i]] * b.lambda[i];
    r.u = a.u.permuted(perm_inverse(b.s)) * b.u;
    // omega_{phi_a} g_b = g_b omega_{g_b^{-1}(phi_a)}
    r.phi = {1, HUnit(a.n), apply_g_inverse(b, a.phi.w) * b.phi.w, b.phi.w_inv * apply_g_inverse(b, a.phi.w_inv)};
    return r;
}

Aut invert(const Aut& sigma) {
    Aut r;
    r.n = sigma.n;
    r.s = perm_inverse(sigma.s);
    r.lambda.resize(sigma.n);
    for (int i = 0; i < sigma.n; ++i) r.lambda[sigma.s[i]] = 1 / sigma.lambda[i];
    r.u = sigma.u.inverse().permuted(sigma.s);
    r.phi = {1, HUnit(sigma.n), apply_g(sigma, sigma.phi.w_inv), apply_g(sigma, sigma.phi.w)};
    return r;
}

bool eq_aut(const Aut& a, const Aut& b) {
    if (a.n != b.n) return false;
    for (int i = 1; i <= a.n; ++i)
        if (!eq(apply(a, gen::x(a.n, i)), apply(b, gen::x(b.n, i)))) return false;
    return true;
}

Images images(const Aut& sigma) {
    Images im;
    im.n = sigma.n;
    for (int i = 1; i <= sigma.n; ++i) {
        im.x.push_back(apply(sigma, gen::x(sigma.n, i)));
        im.y.push_back(apply(sigma, gen::y(sigma.n, i)));
        im.H.push_back(apply(sigma, gen::H(sigma.n, i)));
    }
    return im;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::NotAutomorphism, "relation fails on images: " + what);
}

void check_relations(const Images& im) {
    const int n = im.n;
    AElem one = gen::one(n);
    for (int i = 0; i < n; ++i) {
        std::string s = std::to_string(i + 1);
        require(eq(im.y[i] * im.x[i], one), "y" + s + "x" + s + " = 1");
        require(eq(im.H[i] * im.x[i], im.x[i] * (im.H[i] + one)), "H" + s + "x" + s + " = x" + s + "(H" + s + "+1)");
        require(eq(im.y[i] * im.H[i], (im.H[i] + one) * im.y[i]), "y" + s + "H" + s + " = (H" + s + "+1)y" + s);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            std::string p = s + "," + std::to_string(j + 1);
            require(eq(im.x[i] * im.x[j], im.x[j] * im.x[i]), "[x,x] " + p);
            require(eq(im.y[i] * im.y[j], im.y[j] * im.y[i]), "[y,y] " + p);
            require(eq(im.x[i] * im.y[j], im.y[j] * im.x[i]), "[x,y] " + p);
            require(eq(im.H[i] * im.x[j], im.x[j] * im.H[i]), "[H,x] " + p);
            require(eq(im.H[i] * im.y[j], im.y[j] * im.H[i]), "[H,y] " + p);
            require(eq(im.H[i] * im.H[j], im.H[j] * im.H[i]), "[H,H] " + p);
        }
    }
}

Degree unit_vec(int n, int k) {
    Degree a(n, 0);
    a[k] = 1;
    return a;
}

// 1 + largest position where a difference element can differ from zero
long exception_box(const std::vector<AElem>& diffs) {
    long d = 1;
    for (const auto& e : diffs)
        for (const auto& [alpha, D] : e.comps())
            for (const auto& t : D.terms())
                for (std::size_t k = 0; k < t.f.size(); ++k)
                    for (const auto& [pos, v] : t.f[k].exc())
                        d = std::max({d, pos + 1, pos + alpha[k] + 1});
    return d;
}

struct PhiPair {
    AElem phi, phi_inv;
};

// phi and its inverse for sigma' in ker xi from the images of x_i, y_i
PhiPair build_phi(int n, const std::vector<AElem>& X, const std::vector<AElem>& Y, long d) {
    std::vector<std::vector<AElem>> Xp(n), Yp(n);
    for (int i = 0; i < n; ++i) {
        Xp[i].push_back(gen::one(n));
        Yp[i].push_back(gen::one(n));
        for (long m = 1; m <= d; ++m) {
            Xp[i].push_back(Xp[i].back() * X[i]);
            Yp[i].push_back(Yp[i].back() * Y[i]);
        }
    }
    // E'_jj(i) for j < d and q'(i, d) = sigma'(x_i)^d sigma'(y_i)^d
    std::vector<std::vector<AElem>> Ep(n);
    std::vector<AElem> qp(n);
    for (int i = 0; i < n; ++i) {
        std::vector<AElem> xy;
        for (long j = 0; j <= d; ++j) xy.push_back(Xp[i][j] * Yp[i][j]);
        for (long j = 0; j < d; ++j) Ep[i].push_back(xy[j] - xy[j + 1]);
        qp[i] = xy[d];
    }
    std::vector<EvSeq> qall(n, EvSeq::mask_from(d));
    AElem phi = AElem::diag(DiagN::pure(qall));
    AElem phi_inv = gen::one(n);
    for (int i = 0; i < n; ++i) phi_inv = phi_inv * qp[i];

    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> I;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) I.push_back(i);
        AElem qrest = gen::one(n);
        for (int k = 0; k < n; ++k)
            if (!(mask & (1u << k))) qrest = qrest * qp[k];
        std::vector<long> a(I.size(), 0);
        while (true) {
            // phi term: prod sigma'(y_j)^{d-a_j} * prod E_{d,a_i}(i) * q(CI, d)
            AElem ys = gen::one(n);
            Degree shift(n, 0);
            std::vector<EvSeq> f(n, EvSeq::mask_from(d));
            for (std::size_t t = 0; t < I.size(); ++t) {
                ys = ys * Yp[I[t]][d - a[t]];
                shift[I[t]] = d - a[t];
                f[I[t]] = EvSeq::delta(a[t]);
            }
            phi += ys * AElem::component(shift, DiagN::pure(f));
            // phi^{-1} term: prod y_j^{d-a_j} prod sigma'(x_i)^{d-a_i} prod E'_{a_i a_i}(i) q'(CI, d)
            AElem t1 = gen::one(n), t2 = gen::one(n), t3 = gen::one(n);
            Degree yshift(n, 0);
            for (std::size_t t = 0; t < I.size(); ++t) {
                yshift[I[t]] = -(d - a[t]);
                t2 = t2 * Xp[I[t]][d - a[t]];
                t3 = t3 * Ep[I[t]][a[t]];
            }
            t1 = AElem::shift(yshift);
            phi_inv += t1 * t2 * t3 * qrest;
            std::size_t t = 0;
            while (t < a.size() && ++a[t] >= d) a[t++] = 0;
            if (t == a.size()) break;
        }
    }
    return {phi, phi_inv};
}

}  // namespace

Aut extract(const Images& im) {
    const int n = im.n;
    if (static_cast<int>(im.x.size()) != n || static_cast<int>(im.y.size()) != n ||
        static_cast<int>(im.H.size()) != n)
        throw Error(ErrorKind::ArityMismatch, "need images of x_i, y_i, H_i for every i");
    for (const auto* v : {&im.x, &im.y, &im.H})
        for (const auto& e : *v)
            if (e.arity() != n) throw Error(ErrorKind::ArityMismatch, "image arity mismatch");
    // shape first so that images like H -> -H report NotInShape
    Aut g = Aut::identity(n);
    for (int i = 0; i < n; ++i) {
        QElem q = quotient(im.H[i]);
        int found = -1;
        if (q.comps().size() == 1 && q.comps().begin()->first == Degree(n, 0))
            for (int k = 0; k < n && found < 0; ++k)
                if (q == quotient(gen::H(n, k + 1))) found = k;
        if (found < 0)
            throw Error(ErrorKind::NotInShape, "image of H" + std::to_string(i + 1) + " is not some H_k mod a_n");
        g.s[i] = found;
    }
    if (!is_perm(g.s)) throw Error(ErrorKind::NotInShape, "images of the H_i are not a permutation");

    for (int i = 0; i < n; ++i) {
        QElem q = quotient(im.x[i]);
        RatFunc r;
        if (q.comps().size() != 1 || q.comps().begin()->first != unit_vec(n, g.s[i]) ||
            !q.comps().begin()->second.as_univariate(g.s[i], r))
            throw Error(ErrorKind::NotInShape, "image of x" + std::to_string(i + 1) + " is not x_k * f(H_k) mod a_n");
        long roots = 0;
        for (auto [x, m] : r.num().integer_roots()) {
            g.u.slot(i)[-x] += m;
            roots += m;
        }
        if (roots != r.num().degree())
            throw Error(ErrorKind::NonIntegerRoots, "coefficient of x" + std::to_string(i + 1) + " does not split");
        roots = 0;
        for (auto [x, m] : r.den().integer_roots()) {
            g.u.slot(i)[-x] -= m;
            roots += m;
        }
        if (roots != r.den().degree())
            throw Error(ErrorKind::NonIntegerRoots, "coefficient of x" + std::to_string(i + 1) + " does not split");
        g.lambda[i] = r.num().lead();
    }
    g.u = g.u * HUnit(n);
    check_relations(im);

    std::vector<AElem> X, Y, diffs;
    for (int i = 0; i < n; ++i) {
        X.push_back(apply_g_inverse(g, im.x[i]));
        Y.push_back(apply_g_inverse(g, im.y[i]));
        diffs.push_back(X.back() - gen::x(n, i + 1));
        diffs.push_back(Y.back() - gen::y(n, i + 1));
        diffs.push_back(apply_g_inverse(g, im.H[i]) - gen::H(n, i + 1));
    }
    long d = exception_box(diffs);
    PhiPair pp = build_phi(n, X, Y, d);
    g.phi = {1, HUnit(n), pp.phi, pp.phi_inv};
    if (!g.phi.certify()) throw Error(ErrorKind::NotAutomorphism, "recovered inner part is not a certified unit");
    for (int i = 0; i < n; ++i) {
        AElem xi = gen::x(n, i + 1), yi = gen::y(n, i + 1), Hi = gen::H(n, i + 1);
        if (!eq(apply(g, xi), im.x[i]) || !eq(apply(g, yi), im.y[i]) || !eq(apply(g, Hi), im.H[i]))
            throw Error(ErrorKind::NotAutomorphism, "recovered presentation does not reproduce the images");
    }
    return g;
}

InnerCanonical inner_canonical(const Aut& sigma) {
    auto [alpha, v] = split_degree(sigma.u);
    return {sigma.s, sigma.lambda, alpha, {1, psi_inv(v), sigma.phi.w, sigma.phi.w_inv}};
}

AElem apply_inner(const InnerCanonical& ic, const AElem& a) {
    AElem inner = ic.w.elem() * a * ic.w.inverse_elem();
    return apply_perm(ic.s, apply_torus(ic.lambda, apply_mu(HUnit::H_power(ic.alpha), inner)));
}

QAut xi(const Aut& sigma) {
    QAut q{sigma.n, sigma.s, {}};
    for (int i = 0; i < sigma.n; ++i) q.c.push_back(RatFunc(sigma.lambda[i]) * sigma.u.ratfunc(i));
    return q;
}

QAut compose(const QAut& a, const QAut& b) {
    QAut r{a.n, perm_compose(a.s, b.s), {}};
    for (int i = 0; i < a.n; ++i) r.c.push_back(a.c[b.s[i]] * b.c[i]);
    return r;
}

std::string QAut::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < n; ++i) {
        std::string v = "H" + std::to_string(s[i] + 1);
        if (i) os << "\n";
        os << "x" << i + 1 << " -> x" << s[i] + 1 << "*" << c[i].to_string(v) << ", H" << i + 1 << " -> " << v;
    }
    return os.str();
}

}  // namespace jgwa
