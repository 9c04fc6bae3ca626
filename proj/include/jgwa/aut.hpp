#pragma once

#include <string>
#include <vector>

#include "jgwa/units.hpp"

namespace jgwa {

using Perm = std::vector<int>;  // 0-based, s[i] = image of i

Perm perm_inverse(const Perm& s);
Perm perm_compose(const Perm& a, const Perm& b);  // a o b
bool is_perm(const Perm& s);

// sigma = s o t_lambda o mu_u o omega_phi, phi = 1 mod a_n with certified inverse.
struct Aut {
    int n = 1;
    Perm s;
    std::vector<Rat> lambda;
    HUnit u;
    UnitElem phi;

    static Aut identity(int n);
    static Aut perm(const Perm& s);
    static Aut torus(const std::vector<Rat>& lambda);
    static Aut mu(const HUnit& u);
    static Aut omega(const UnitElem& phi);  // phi must have scalar 1 and h = e
    static Aut eta_theta(int n, int i);     // x_i -> x_i H_i, 1-based i
};

// Image in Aut(A_n / a_n): x_i -> x_{s(i)} c_i(H_{s(i)}), H_i -> H_{s(i)}.
struct QAut {
    int n = 1;
    Perm s;
    std::vector<RatFunc> c;

    friend bool operator==(const QAut& a, const QAut& b) { return a.s == b.s && a.c == b.c; }
    std::string to_string() const;
};

AElem apply(const Aut& sigma, const AElem& a);
Aut compose(const Aut& a, const Aut& b);
Aut invert(const Aut& sigma);
bool eq_aut(const Aut& a, const Aut& b);

struct Images {
    int n = 1;
    std::vector<AElem> x, y, H;
};

Images images(const Aut& sigma);
Aut extract(const Images& im);

struct InnerCanonical {
    Perm s;
    std::vector<Rat> lambda;
    Degree alpha;
    UnitElem w;  // psi^{-1}(v) * phi
};

InnerCanonical inner_canonical(const Aut& sigma);
// s t_lambda mu_{H^alpha} omega_w, with omega_w applied by conjugation
AElem apply_inner(const InnerCanonical& ic, const AElem& a);

QAut xi(const Aut& sigma);
QAut compose(const QAut& a, const QAut& b);

// pieces of apply, exposed for tests
AElem apply_perm(const Perm& s, const AElem& a);
AElem apply_torus(const std::vector<Rat>& lambda, const AElem& a);
AElem apply_mu(const HUnit& u, const AElem& a);

}  // namespace jgwa
