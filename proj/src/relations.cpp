#include "jgwa/relations.hpp"

#include "jgwa/aelem.hpp"

namespace jgwa {

std::vector<Check> relation_suite(int n, Gen& g, int trials) {
    std::vector<Check> out;
    auto add = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };
    const AElem one = gen::one(n);
    for (int i = 1; i <= n; ++i) {
        std::string s = std::to_string(i);
        AElem x = gen::x(n, i), y = gen::y(n, i);
        add("y" + s + "*x" + s + " = 1", eq(y * x, one));
        add("x" + s + "*y" + s + " = sigma(1)", eq(x * y, gen::d(n, i, EvSeq(1).sigma())));
        add("x" + s + "*y" + s + " = 1 - E00", eq(x * y, one - gen::E(n, i, 0, 0)));
        add("H" + s + " invertible", eq(gen::H(n, i) * gen::Hinv(n, i), one));
        for (long j = 1; j <= 3; ++j) {
            AElem h = gen::Hs(n, i, j);
            AElem hinv = gen::d(n, i, hs_atom(j).inverse());
            add("(H" + s + "-" + std::to_string(j) + ")_1 invertible", eq(h * hinv, one) && eq(hinv * h, one));
        }
        add("d" + s + " = H" + s + "*y" + s, eq(gen::partial(n, i), gen::H(n, i) * y));
        for (int t = 0; t < trials; ++t) {
            DiagN d = g.diag(n, 2, 2);
            AElem D = AElem::diag(d);
            AElem sD = AElem::diag(d.map_slot(i - 1, [](const EvSeq& e) { return e.sigma(); }));
            AElem tD = AElem::diag(d.map_slot(i - 1, [](const EvSeq& e) { return e.tau(); }));
            add("sigma(d)x = x d [" + s + "]", eq(sD * x, x * D));
            add("d y = y sigma(d) [" + s + "]", eq(D * y, y * sD));
            add("x d y = sigma(d) [" + s + "]", eq(x * D * y, sD));
            add("y d x = tau(d) [" + s + "]", eq(y * D * x, tD));
        }
        for (long a = 0; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b) {
                AElem e = gen::E(n, i, a, b);
                bool ok = eq(x * e, gen::E(n, i, a + 1, b));
                ok = ok && eq(y * e, a == 0 ? AElem(n) : gen::E(n, i, a - 1, b));
                for (long c = 0; c <= 3; ++c)
                    for (long d = 0; d <= 3; ++d)
                        ok = ok && eq(e * gen::E(n, i, c, d), b == c ? gen::E(n, i, a, d) : AElem(n));
                add("matrix units E" + std::to_string(a) + std::to_string(b) + " [" + s + "]", ok);
            }
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            std::string p = "[" + s + "," + std::to_string(j) + "]";
            AElem xj = gen::x(n, j), yj = gen::y(n, j), Hj = gen::H(n, j);
            add("[x,x]" + p, eq(x * xj, xj * x));
            add("[y,y]" + p, eq(y * yj, yj * y));
            add("[x,y]" + p, eq(x * yj, yj * x));
            add("[H,x]" + p, eq(gen::H(n, i) * xj, xj * gen::H(n, i)));
            add("[H,y]" + p, eq(gen::H(n, i) * yj, yj * gen::H(n, i)));
            add("[H,H]" + p, eq(gen::H(n, i) * Hj, Hj * gen::H(n, i)));
        }
    }
    return out;
}

std::vector<Check> faithfulness_suite(int n, Gen& g, int trials, long span, long beta_max) {
    std::vector<Check> out;
    for (int t = 0; t < trials; ++t) {
        AElem a = g.aelem(n, span, 3, 2), b = g.aelem(n, span, 3, 2);
        AElem ab = a * b;
        bool ok = true;
        Degree beta(n, 0);
        while (ok) {
            Poly m = monomial(beta);
            ok = ab.act(m) == a.act(b.act(m));
            int i = 0;
            while (i < n && ++beta[i] > beta_max) beta[i++] = 0;
            if (i == n) break;
        }
        out.push_back({"faithful pair " + std::to_string(t), ok});
    }
    return out;
}

}  // namespace jgwa
