#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jgwa/aelem.hpp"

namespace jgwa {

struct Expr {
    enum class Kind { Sum, Product, Neg, Power, Atom };
    enum class Atom { Number, X, Y, H, Hs, E, EMulti, Partial, Integ, P, Q, D };

    Kind kind = Kind::Atom;
    std::vector<Expr> args;  // Sum, Product, Neg and Power (base) operands
    long power = 1;

    Atom atom = Atom::Number;
    std::size_t pos = 0;
    int index = 0;          // 1-based coordinate
    std::vector<long> ints;  // Hs: j; E: a, b; p/q: d; EMulti: alpha then beta
    Rat value;               // Number
    std::shared_ptr<EvSeq> seq;  // D
};

Expr parse_expr(const std::string& text);
// largest coordinate mentioned, 0 for a constant
int expr_arity(const Expr& e);
AElem elaborate(const Expr& e, int n);
inline AElem parse_elem(const std::string& text, int n) { return elaborate(parse_expr(text), n); }

// Parses "(num)/(den)" style rational functions in the variable H.
RatFunc parse_ratfunc(const std::string& text);

// Parseable normal form: components x^a*y^b*(c*D1[r|k:v]*...) joined by " + ".
std::string print_elem(const AElem& a);

}  // namespace jgwa
