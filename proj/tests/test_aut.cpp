#include "doctest.h"
#include "jgwa/algebra.hpp"
#include "jgwa/aut.hpp"
#include "jgwa/error.hpp"
#include "jgwa/random.hpp"

using namespace jgwa;
namespace g = jgwa::gen;

namespace {

FinMat single(int n, const Degree& a, const Degree& b, const Rat& c) {
    FinMat m;
    m.n = n;
    m.add(a, b, c);
    return m;
}

// sigma(x_i)^a ... built from the images only
AElem image_of_E(const Images& im, int i, long a, long b) {
    const int n = im.n;
    AElem xa = g::one(n), yb = g::one(n);
    for (long k = 0; k < a; ++k) xa = xa * im.x[i];
    for (long k = 0; k < b; ++k) yb = yb * im.y[i];
    return xa * (g::one(n) - im.x[i] * im.y[i]) * yb;
}

// random element of S_n: words in x_i, y_i
AElem random_sn(Gen& gen, int n) {
    AElem a(n);
    long terms = gen.integer(1, 3);
    for (long t = 0; t < terms; ++t) {
        AElem w = AElem::scalar(n, gen.nonzero_rat(3));
        long len = gen.integer(0, 4);
        for (long k = 0; k < len; ++k) {
            int i = static_cast<int>(gen.integer(1, n));
            w = w * (gen.coin() ? g::x(n, i) : g::y(n, i));
        }
        a += w;
    }
    return a;
}

}  // namespace

TEST_CASE("torus and permutation actions") {
    Gen gen(11);
    for (int t = 0; t < 20; ++t) {
        int n = static_cast<int>(gen.integer(1, 3));
        Degree a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = gen.integer(0, 3);
            b[i] = gen.integer(0, 3);
        }
        std::vector<Rat> lam;
        Rat c(1);
        for (int i = 0; i < n; ++i) {
            lam.push_back(gen.nonzero_rat(3));
            c *= rat_pow(lam[i], a[i] - b[i]);
        }
        CHECK(eq(apply(Aut::torus(lam), g::E(a, b)), g::E(a, b) * c));
        Aut p = Aut::identity(n);
        std::shuffle(p.s.begin(), p.s.end(), gen.engine());
        Degree pa(n), pb(n);
        for (int i = 0; i < n; ++i) {
            pa[p.s[i]] = a[i];
            pb[p.s[i]] = b[i];
        }
        CHECK(eq(apply(p, g::E(a, b)), g::E(pa, pb)));
    }
}

TEST_CASE("mu_u on matrix units") {
    Gen gen(12);
    for (int t = 0; t < 20; ++t) {
        HUnit u(1);
        for (int k = 0; k < 3; ++k) u = u * HUnit::atom(1, 0, gen.integer(-3, 3), gen.coin() ? 1 : -1);
        Aut m = Aut::mu(u);
        long i = gen.integer(0, 4), j = gen.integer(0, 4);
        // images x -> x u, y -> u^{-1} y
        Images im{1, {g::x(1, 1) * hunit_to_elem(u)}, {hunit_to_elem(u.inverse()) * g::y(1, 1)}, {g::H(1, 1)}};
        AElem lhs = apply(m, g::E(1, 1, i, j));
        CHECK(eq(lhs, image_of_E(im, 0, i, j)));
        if (i > j) {
            AElem rhs = g::E(1, 1, i, j);
            for (long l = 0; l < i - j; ++l) rhs = rhs * AElem::diag(DiagN::slot(1, 0, u.seq(0).shift(l)));
            CHECK(eq(lhs, rhs));
        }
    }
}

TEST_CASE("identity and basic presentations") {
    Gen gen(13);
    for (int t = 0; t < 10; ++t) {
        AElem a = gen.aelem(2);
        CHECK(eq(apply(Aut::identity(2), a), a));
    }
    Aut s = Aut::perm({1, 0});
    Aut tl = Aut::torus({2, Rat(1, 3)});
    Aut ts = Aut::torus({Rat(1, 3), 2});
    CHECK(eq_aut(compose(compose(s, tl), invert(s)), ts));
    CHECK(eq_aut(invert(tl), Aut::torus({Rat(1, 2), 3})));
    CHECK(!eq_aut(tl, ts));
    CHECK(eq_aut(tl, tl));

    Aut om = Aut::omega(UnitElem::from_finmat(single(1, {0}, {1}, 1)));
    Aut om_inv = Aut::omega(UnitElem::from_finmat(single(1, {0}, {1}, -1)));
    CHECK(eq_aut(invert(om), om_inv));
}

TEST_CASE("omega_u equals mu_psi(u)") {
    Gen gen(14);
    for (int t = 0; t < 15; ++t) {
        int n = static_cast<int>(gen.integer(1, 2));
        HUnit u(n);
        for (int k = 0; k < 3; ++k)
            u = u * HUnit::atom(n, static_cast<int>(gen.integer(0, n - 1)), gen.integer(-3, 3), gen.coin() ? 1 : -1);
        Aut m = Aut::mu(psi(u));
        for (int i = 1; i <= n; ++i) {
            CHECK(eq(hunit_to_elem(u) * g::x(n, i) * hunit_to_elem(u.inverse()), apply(m, g::x(n, i))));
            CHECK(eq(hunit_to_elem(u) * g::y(n, i) * hunit_to_elem(u.inverse()), apply(m, g::y(n, i))));
        }
    }
}

TEST_CASE("group laws on random presentations") {
    Gen gen(15);
    for (int t = 0; t < 12; ++t) {
        int n = static_cast<int>(gen.integer(1, 2));
        Aut a = gen.aut(n), b = gen.aut(n), c = gen.aut(n);
        CHECK(a.phi.certify());
        Aut ab = compose(a, b);
        CHECK(ab.phi.certify());
        for (int i = 1; i <= n; ++i) {
            CHECK(eq(apply(ab, g::x(n, i)), apply(a, apply(b, g::x(n, i)))));
            CHECK(eq(apply(ab, g::y(n, i)), apply(a, apply(b, g::y(n, i)))));
            CHECK(eq(apply(invert(a), apply(a, g::x(n, i))), g::x(n, i)));
        }
        CHECK(eq_aut(compose(ab, c), compose(a, compose(b, c))));
        CHECK(eq_aut(invert(invert(a)), a));
        CHECK(eq_aut(compose(a, invert(a)), Aut::identity(n)));
        CHECK(eq_aut(compose(a, Aut::identity(n)), a));
        AElem e = gen.aelem(n, 2, 2);
        CHECK(eq(apply(ab, e), apply(a, apply(b, e))));
    }
}

TEST_CASE("apply is an algebra map and preserves a_n") {
    Gen gen(16);
    for (int t = 0; t < 10; ++t) {
        int n = static_cast<int>(gen.integer(1, 2));
        Aut s = gen.aut(n);
        AElem a = gen.aelem(n, 2, 2), b = gen.aelem(n, 2, 2);
        CHECK(eq(apply(s, a * b), apply(s, a) * apply(s, b)));
        CHECK(eq(apply(s, a + b), apply(s, a) + apply(s, b)));
        AElem f = g::E(n, 1, gen.integer(0, 3), gen.integer(0, 3));
        CHECK(quotient(apply(s, f)).is_zero());
        if (n == 1) CHECK(elem_to_finmat(apply(s, f)).has_value());
    }
}

TEST_CASE("xi") {
    Gen gen(17);
    Aut om = Aut::omega(UnitElem::from_finmat(single(1, {0}, {0}, 1)));
    CHECK(xi(om) == xi(Aut::identity(1)));
    QAut qt = xi(Aut::torus({3, Rat(-1, 2)}));
    CHECK(qt.c == std::vector<RatFunc>{RatFunc(3), RatFunc(Rat(-1, 2))});
    QAut qm = xi(Aut::mu(HUnit::atom(1, 0, -1)));
    CHECK(qm.c[0] == RatFunc(UPoly::linear(-1)));
    for (int t = 0; t < 50; ++t) {
        int n = static_cast<int>(gen.integer(1, 3));
        Aut a = gen.aut(n, 2, 1), b = gen.aut(n, 2, 1);
        CHECK(xi(compose(a, b)) == compose(xi(a), xi(b)));
    }
}

TEST_CASE("extract") {
    Aut tm = compose(Aut::torus({2}), Aut::mu(HUnit::atom(1, 0, -2) * HUnit::atom(1, 0, 1, -1)));
    Aut r = extract(images(tm));
    CHECK(r.s == tm.s);
    CHECK(r.lambda == tm.lambda);
    CHECK(r.u == tm.u);
    CHECK(eq(r.phi.w, g::one(1)));

    UnitElem p = UnitElem::from_finmat(single(1, {0}, {0}, 1));
    Aut om = Aut::omega(p);
    Aut r2 = extract(images(om));
    CHECK(eq_aut(r2, om));
    CHECK(eq(r2.phi.w, p.w));

    Images bad{1, {g::x(1, 1)}, {g::y(1, 1)}, {g::H(1, 1) * Rat(-1)}};
    CHECK_THROWS_WITH_AS(extract(bad), doctest::Contains("H1"), Error);
    try {
        extract(bad);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInShape);
    }
    Images rel{1, {g::x(1, 1) * Rat(2)}, {g::y(1, 1)}, {g::H(1, 1)}};
    try {
        extract(rel);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAutomorphism);
    }
    Images roots{1, {g::x(1, 1) * AElem::diag(DiagN::slot(1, 0, EvSeq(RatFunc(UPoly({1, 0, 1})), {})))}, {g::y(1, 1)}, {g::H(1, 1)}};
    try {
        extract(roots);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegerRoots);
    }

    Gen gen(18);
    for (int t = 0; t < 12; ++t) {
        int n = static_cast<int>(gen.integer(1, 2));
        Aut a = gen.aut(n, n == 1 ? 4 : 3, 3);
        Aut b = extract(images(a));
        CHECK(eq_aut(a, b));
        CHECK(b.s == a.s);
        CHECK(b.lambda == a.lambda);
        CHECK(b.u == a.u);
        CHECK(eq(b.phi.w, a.phi.w));
    }
}

TEST_CASE("inner canonical presentation") {
    InnerCanonical ic = inner_canonical(Aut::mu(HUnit::atom(1, 0, 0)));
    CHECK(ic.alpha == Degree{1});
    CHECK(eq(ic.w.elem(), g::one(1)));
    ic = inner_canonical(Aut::mu(HUnit::atom(1, 0, 1) * HUnit::atom(1, 0, 0, -1)));
    CHECK(ic.alpha == Degree{0});
    CHECK(ic.w.h == HUnit::atom(1, 0, 0));
    CHECK(eq(ic.w.elem(), g::H(1, 1)));

    Gen gen(19);
    for (int t = 0; t < 10; ++t) {
        int n = static_cast<int>(gen.integer(1, 2));
        Aut a = gen.aut(n);
        InnerCanonical c = inner_canonical(a);
        CHECK(c.w.certify());
        for (int i = 1; i <= n; ++i) {
            CHECK(eq(apply_inner(c, g::x(n, i)), apply(a, g::x(n, i))));
            CHECK(eq(apply_inner(c, g::H(n, i)), apply(a, g::H(n, i))));
        }
    }
}

TEST_CASE("G_n preserves S_n") {
    Gen gen(20);
    for (int t = 0; t < 15; ++t) {
        int n = static_cast<int>(gen.integer(1, 2));
        Aut a = gen.aut(n);
        a.u = HUnit(n);
        AElem s = random_sn(gen, n);
        REQUIRE(in_Sn(s));
        CHECK(in_Sn(apply(a, s)));
    }
    // u != e leaves S_n
    CHECK(!in_Sn(apply(Aut::mu(HUnit::atom(1, 0, 0)), g::x(1, 1))));
}
