#include "jgwa/random.hpp"

#include <algorithm>

#include "jgwa/aelem.hpp"
#include "jgwa/aut.hpp"

namespace jgwa {

Rat Gen::rat(long span) {
    Rat q(integer(-span, span), integer(1, span));
    q.canonicalize();
    return q;
}

Rat Gen::nonzero_rat(long span) {
    Rat q;
    do q = rat(span);
    while (q == 0);
    return q;
}

RatFunc Gen::ratfunc(int deg) {
    UPoly num(nonzero_rat(4)), den(1);
    long a = integer(0, deg), b = integer(0, deg);
    for (long k = 0; k < a; ++k) num *= UPoly::linear(integer(-4, 4));
    for (long k = 0; k < b; ++k) den *= UPoly::linear(integer(-4, 4));
    if (deg >= 2 && coin(0.15)) num += UPoly(std::vector<Rat>{1, 0, 1});  // no rational roots
    if (num.is_zero()) num = UPoly(1);
    return RatFunc(num, den);
}

EvSeq Gen::evseq(int deg, long exc_span) {
    RatFunc r;
    switch (integer(0, 3)) {
        case 0: break;
        case 1: r = RatFunc(nonzero_rat()); break;
        default: r = ratfunc(deg);
    }
    std::map<long, Rat> exc;
    for (long k : r.positive_poles()) exc[k] = rat();
    long extra = integer(0, 2);
    for (long k = 0; k < extra; ++k) exc[integer(0, exc_span - 1)] = rat();
    return EvSeq(r, exc);
}

DiagN Gen::diag(int n, int deg, int max_terms) {
    DiagN d(n);
    long T = integer(1, max_terms);
    for (long t = 0; t < T; ++t) {
        std::vector<EvSeq> f;
        for (int i = 0; i < n; ++i) f.push_back(evseq(deg));
        d.append(DiagN::pure(std::move(f), nonzero_rat()));
    }
    d.normalize();
    return d;
}

AElem Gen::aelem(int n, long span, int ncomp, int deg) {
    std::map<Degree, DiagN> raw;
    long k = integer(1, ncomp);
    for (long c = 0; c < k; ++c) {
        Degree alpha(n);
        for (auto& a : alpha) a = integer(-span, span);
        auto d = diag(n, deg, 2);
        auto it = raw.find(alpha);
        if (it == raw.end())
            raw.emplace(alpha, d);
        else
            it->second.append(d);
    }
    return AElem::from_raw(n, std::move(raw));
}

Aut Gen::aut(int n, long box, int entries) {
    Aut a = Aut::identity(n);
    std::shuffle(a.s.begin(), a.s.end(), rng_);
    for (auto& l : a.lambda) l = nonzero_rat(3);
    long atoms = integer(0, 3);
    for (long k = 0; k < atoms; ++k) a.u = a.u * HUnit::atom(n, static_cast<int>(integer(0, n - 1)), integer(-3, 3), coin() ? 1 : -1);
    FinMat m;
    m.n = n;
    long e = integer(0, entries);
    for (long k = 0; k < e; ++k) {
        Degree al(n), be(n);
        for (int i = 0; i < n; ++i) {
            al[i] = integer(0, box - 1);
            be[i] = integer(0, box - 1);
        }
        m.add(al, be, rat(3));
    }
    if (det1p(m) == 0) m.entries.clear();
    a.phi = UnitElem::from_finmat(m);
    return a;
}

}  // namespace jgwa
