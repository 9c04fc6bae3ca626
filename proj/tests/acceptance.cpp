// Acceptance gate: one PASS/FAIL line per criterion with its wall time.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "jgwa/algebra.hpp"
#include "jgwa/aut.hpp"
#include "jgwa/error.hpp"
#include "jgwa/lattice.hpp"
#include "jgwa/random.hpp"
#include "jgwa/relations.hpp"
#include "jgwa/units.hpp"

using namespace jgwa;
namespace g = jgwa::gen;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

bool all_ok(const std::vector<Check>& cs, Outcome& o) {
    for (const auto& c : cs) o.require(c.ok, c.name);
    return o.ok;
}

Outcome relations() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        Gen gen(1000 + n);
        all_ok(relation_suite(n, gen, 5), o);
    }
    return o;
}

Outcome faithfulness() {
    Outcome o;
    Gen gen(2000);
    all_ok(faithfulness_suite(1, gen, 50, 3, 8), o);
    all_ok(faithfulness_suite(2, gen, 50, 3, 8), o);
    return o;
}

AElem random_fredholm(Gen& gen, int n) {
    while (true) {
        AElem a = gen.aelem(n, 2, 3, 1);
        if (!quotient(a).is_zero()) return a;
    }
}

Outcome index_checks() {
    Outcome o;
    for (long i = 0; i <= 5; ++i) {
        o.require(index(g::x(1, 1).pow(i)) == -i, "ind(x^" + std::to_string(i) + ")");
        o.require(index(g::y(1, 1).pow(i)) == i, "ind(y^" + std::to_string(i) + ")");
    }
    Gen gen(3000);
    for (int t = 0; t < 50; ++t) {
        AElem a = random_fredholm(gen, 1), b = random_fredholm(gen, 1);
        o.require(index(a * b) == index(a) + index(b), "additivity, pair " + std::to_string(t));
    }
    for (int t = 0; t < 50; ++t) {
        AElem a = random_fredholm(gen, 1);
        o.require(index(a) == index_oracle(a, 10, 64), "oracle, element " + std::to_string(t));
    }
    return o;
}

Rat fact(long k) {
    Rat r(1);
    for (long j = 2; j <= k; ++j) r *= j;
    return r;
}

Outcome involutions() {
    Outcome o;
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b)
            o.require(eq(theta(g::E(1, 1, a, b)), g::E(1, 1, b, a) * (fact(a) / fact(b))), "theta(E_ab), n = 1");
    for (long a1 = 0; a1 <= 4; ++a1)
        for (long a2 = 0; a2 <= 4; ++a2)
            for (long b1 = 0; b1 <= 4; ++b1)
                for (long b2 = 0; b2 <= 4; ++b2) {
                    Rat c = fact(a1) * fact(a2) / (fact(b1) * fact(b2));
                    o.require(eq(theta(g::E({a1, a2}, {b1, b2})), g::E({b1, b2}, {a1, a2}) * c), "theta(E_ab), n = 2");
                }
    Gen gen(4000);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + t % 2;
        AElem a = gen.aelem(n, 2, 2, 1), b = gen.aelem(n, 2, 2, 1);
        o.require(eq(eta(a * b), eta(b) * eta(a)), "eta anti-multiplicative");
        o.require(eq(theta(a * b), theta(b) * theta(a)), "theta anti-multiplicative");
        o.require(eq(eta(eta(a)), a), "eta involutive");
        o.require(eq(theta(theta(a)), a), "theta involutive");
    }
    AElem x = g::x(1, 1), cur = x, expect = x;
    Aut et = Aut::eta_theta(1, 1), pw = et;
    for (int m = 1; m <= 3; ++m) {
        cur = eta(theta(cur));
        expect = expect * g::H(1, 1);
        o.require(eq(cur, expect), "(eta theta)^m(x)");
        o.require(eq(apply(pw, x), expect), "Aut eta_theta^m(x)");
        pw = compose(pw, et);
    }
    return o;
}

Rat cofactor_det(const std::vector<std::vector<Rat>>& A) {
    const std::size_t k = A.size();
    if (k == 0) return 1;
    Rat s(0);
    for (std::size_t j = 0; j < k; ++j) {
        if (A[0][j] == 0) continue;
        std::vector<std::vector<Rat>> minor;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<Rat> row;
            for (std::size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(A[i][c]);
            minor.push_back(row);
        }
        Rat t = A[0][j] * cofactor_det(minor);
        s += (j % 2 ? -t : t);
    }
    return s;
}

FinMat random_finmat(Gen& gen, int n, long box, int entries) {
    FinMat m;
    m.n = n;
    for (int e = 0; e < entries; ++e) {
        Degree a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a[i] = gen.integer(0, box - 1);
            b[i] = gen.integer(0, box - 1);
        }
        m.add(a, b, gen.rat(3));
    }
    return m;
}

Outcome units() {
    Outcome o;
    Gen gen(5000);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 2;
        FinMat m = random_finmat(gen, n, n == 1 ? 5 : 3, static_cast<int>(gen.integer(1, 10)));
        std::set<Degree> s;
        for (const auto& [ab, c] : m.entries) s.insert(ab.first), s.insert(ab.second);
        if (s.size() > 5) {
            --t;
            continue;
        }
        std::vector<Degree> S(s.begin(), s.end());
        std::vector<std::vector<Rat>> A(S.size(), std::vector<Rat>(S.size()));
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = 0; j < S.size(); ++j) {
                auto it = m.entries.find({S[i], S[j]});
                A[i][j] = (i == j ? 1 : 0) + (it == m.entries.end() ? Rat(0) : it->second);
            }
        o.require(det1p(m) == cofactor_det(A), "det1p vs cofactor, matrix " + std::to_string(t));
    }
    int done = 0;
    while (done < 200) {
        FinMat f = random_finmat(gen, 1, 4, static_cast<int>(gen.integer(0, 4)));
        if (det1p(f) == 0) continue;
        Rat lam = gen.nonzero_rat();
        HUnit h(1);
        for (long k = gen.integer(0, 3); k > 0; --k) h = h * HUnit::atom(1, 0, gen.integer(-3, 3), gen.coin() ? 1 : -1);
        AElem w = g::one(1) + finmat_to_elem(f);
        AElem a = hunit_to_elem(h) * w * lam;
        UnitElem u = unit_decompose(a);
        o.require(u.scalar == lam && u.h == h && eq(u.w, w) && u.certify() && eq(u.elem(), a),
                  "unit_decompose round trip " + std::to_string(done));
        ++done;
    }
    return o;
}

Outcome psi_checks() {
    Outcome o;
    Gen gen(6000);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 3;
        HUnit v(n);
        for (int k = 0; k < 4; ++k)
            v = v * HUnit::atom(n, static_cast<int>(gen.integer(0, n - 1)), gen.integer(-4, 4), gen.integer(-2, 2));
        for (int k = 0; k < n; ++k)
            if (long d = deg_H(v, k)) v = v * HUnit::atom(n, k, gen.integer(-4, 4), -d);
        o.require(psi(psi_inv(v)) == v, "psi o psi^-1, vector " + std::to_string(t));
    }
    for (int t = 0; t < 20; ++t) {
        int n = 1 + t % 2;
        HUnit u(n);
        for (int k = 0; k < 3; ++k)
            u = u * HUnit::atom(n, static_cast<int>(gen.integer(0, n - 1)), gen.integer(-3, 3), gen.coin() ? 1 : -1);
        Aut m = Aut::mu(psi(u));
        AElem ue = hunit_to_elem(u), ui = hunit_to_elem(u.inverse());
        for (int i = 1; i <= n; ++i)
            for (const AElem& z : {g::x(n, i), g::y(n, i), g::H(n, i)})
                o.require(eq(ue * z * ui, apply(m, z)), "mu_psi(u) = omega_u, unit " + std::to_string(t));
    }
    return o;
}

Outcome automorphisms() {
    Outcome o;
    Gen gen(7000);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 2;
        Aut s = gen.aut(n, 4, 4);
        std::string id = std::to_string(t);
        o.require(eq_aut(compose(s, invert(s)), Aut::identity(n)), "compose(s, invert(s)), aut " + id);
        Aut back = extract(images(s));
        o.require(eq_aut(back, s) && back.s == s.s && back.lambda == s.lambda && back.u == s.u &&
                      eq(back.phi.w, s.phi.w),
                  "extract(images(s)), aut " + id);
    }
    for (int t = 0; t < 50; ++t) {
        int n = 1 + t % 2;
        Aut a = gen.aut(n, 4, 2), b = gen.aut(n, 4, 2);
        o.require(xi(compose(a, b)) == compose(xi(a), xi(b)), "xi homomorphism, pair " + std::to_string(t));
    }
    return o;
}

Subset image(Subset s, const std::vector<int>& p) {
    Subset t = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (s >> i & 1) t |= Subset(1) << p[i];
    return t;
}

long brute_order(const IdealAC& a) {
    std::vector<int> p(a.n());
    std::iota(p.begin(), p.end(), 0);
    std::set<Subset> fam(a.members().begin(), a.members().end());
    long count = 0;
    do {
        std::set<Subset> img;
        for (Subset s : a.members()) img.insert(image(s, p));
        count += img == fam;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

Int wreath(int n, const std::vector<Subset>& fam) {
    std::map<int, int> by;
    int covered = 0;
    for (Subset s : fam) {
        ++by[subset_size(s)];
        covered += subset_size(s);
    }
    Int r = factorial(n - covered);
    for (auto [h, k] : by) {
        Int hf = factorial(h);
        for (int t = 0; t < k; ++t) r *= hf;
        r *= factorial(k);
    }
    return r;
}

void disjoint_families(int n, Subset next, Subset used, std::vector<Subset>& cur, std::vector<IdealAC>& out) {
    for (Subset s = next; s < (Subset(1) << n); ++s) {
        if (s & used) continue;
        cur.push_back(s);
        out.emplace_back(n, cur);
        disjoint_families(n, s + 1, used | s, cur, out);
        cur.pop_back();
    }
}

Outcome stabilizers() {
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : all_antichains(n))
            o.require(stabilizer(a).order == brute_order(a), "stabilizer order " + a.to_string());
    Gen gen(8000);
    for (int t = 0; t < 200; ++t) {
        IdealAC a = random_antichain(gen, 5 + t % 2);
        o.require(stabilizer(a).order == brute_order(a), "stabilizer order " + a.to_string());
    }
    for (int n = 1; n <= 6; ++n) {
        for (int i = 0; i < n; ++i) o.require(stabilizer(IdealAC(n, {Subset(1) << i})).index == n, "height one index");
        std::vector<IdealAC> gens;
        std::vector<Subset> cur;
        disjoint_families(n, 1, 0, cur, gens);
        for (const auto& a : gens) {
            auto gs = generic_structure(a);
            o.require(gs && gs->order == wreath(n, a.members()) && stabilizer(a).order == gs->order,
                      "wreath formula " + a.to_string());
        }
        o.require(prime_count(n) == (std::size_t(1) << n), "prime count");
    }
    for (int n = 1; n <= 5; ++n) {
        auto inv = invariant_ideals(n);
        std::size_t full = 0;
        for (const auto& a : all_antichains(n))
            if (stabilizer(a).index == 1) {
                ++full;
                o.require(std::find(inv.begin(), inv.end(), a) != inv.end(), "invariant ideal " + a.to_string());
            }
        o.require(full == std::size_t(n) && inv.size() == std::size_t(n), "invariant ideal count");
    }
    return o;
}

Outcome quotients() {
    Outcome o;
    Gen gen(9000);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 2;
        AElem a = gen.aelem(n, 2, 3, 2), b = gen.aelem(n, 2, 3, 2);
        o.require(quotient(a * b) == quotient(a) * quotient(b), "pi multiplicative, pair " + std::to_string(t));
    }
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= 4; ++b) {
            o.require(quotient(g::E(1, 1, a, b)).is_zero(), "pi(E_ab), n = 1");
            o.require(quotient(g::E({a, b}, {b, a})).is_zero(), "pi(E_ab), n = 2");
        }
    QElem qy = quotient(g::y(1, 1)), qx = quotient(g::x(1, 1)), one = quotient(g::one(1));
    o.require(qy.comps().size() == 1 && qy.comps().begin()->first == Degree{-1}, "pi(y) has degree -1");
    o.require(qx * qy == one && qy * qx == one, "pi(y) = x^-1");
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> all = {
        {1, "relation suite, n = 1..3", 10, relations},
        {2, "faithfulness on 100 random pairs", 60, faithfulness},
        {3, "Fredholm index", 60, index_checks},
        {4, "involutions eta and theta", 30, involutions},
        {5, "determinant and units", 60, units},
        {6, "psi and omega_u = mu_psi(u)", 30, psi_checks},
        {7, "automorphism calculus", 300, automorphisms},
        {8, "stabilizers and ideal counts", 120, stabilizers},
        {9, "quotient map", 30, quotients},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && s > c.limit) {
            o.ok = false;
            o.note = "over the time limit";
        }
        std::printf("%s %d: %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, s, c.limit,
                    o.ok ? "" : ": ", o.note.c_str());
        std::fflush(stdout);
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
