#include "jgwa/expr.hpp"

#include <cctype>
#include <sstream>

#include "jgwa/error.hpp"

namespace jgwa {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Expr parse_all() {
        Expr e = sum();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

    RatFunc ratfunc_all() {
        RatFunc r = rf_sum();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool digit_next() {
        skip();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }

    std::string digits() {
        skip();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (b == i_) fail("expected a number");
        return s_.substr(b, i_ - b);
    }

    long integer() {
        bool neg = accept('-');
        std::string d = digits();
        if (d.size() > 15) fail("integer too large");
        long v = std::stol(d);
        return neg ? -v : v;
    }

    // unsigned literal, p or p/q
    Rat number() {
        Rat v{Int{digits()}};
        std::size_t save = i_;
        if (accept('/') && digit_next()) {
            Int q(digits());
            if (q == 0) fail("zero denominator");
            v /= Rat(q);
        } else {
            i_ = save;
        }
        return v;
    }

    Rat signed_number() {
        bool neg = accept('-');
        Rat v = number();
        return neg ? -v : v;
    }

    int index_after(std::size_t start) {
        std::string d = digits();
        if (d.size() > 6) throw SyntaxError("index too large", start);
        return std::stoi(d);
    }

    Expr sum() {
        Expr e;
        e.kind = Expr::Kind::Sum;
        e.pos = i_;
        bool neg = accept('-');
        e.args.push_back(neg ? negate(product()) : product());
        while (true) {
            if (accept('+'))
                e.args.push_back(product());
            else if (accept('-'))
                e.args.push_back(negate(product()));
            else
                break;
        }
        if (e.args.size() == 1) return e.args[0];
        return e;
    }

    static Expr negate(Expr a) {
        Expr e;
        e.kind = Expr::Kind::Neg;
        e.pos = a.pos;
        e.args.push_back(std::move(a));
        return e;
    }

    Expr product() {
        Expr e;
        e.kind = Expr::Kind::Product;
        e.pos = i_;
        e.args.push_back(power());
        while (accept('*')) e.args.push_back(power());
        if (e.args.size() == 1) return e.args[0];
        return e;
    }

    Expr power() {
        Expr b = primary();
        if (!accept('^')) return b;
        std::size_t at = i_;
        Expr e;
        e.kind = Expr::Kind::Power;
        e.pos = at;
        e.power = integer();
        e.args.push_back(std::move(b));
        return e;
    }

    Expr primary() {
        skip();
        Expr e;
        e.pos = i_;
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Expr inner = sum();
            expect(')');
            return inner;
        }
        if (c == '-') {
            ++i_;
            return negate(power());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            e.atom = Expr::Atom::Number;
            e.value = number();
            return e;
        }
        ++i_;
        switch (c) {
            case 'x': e.atom = Expr::Atom::X; e.index = index_after(e.pos); return e;
            case 'y': e.atom = Expr::Atom::Y; e.index = index_after(e.pos); return e;
            case 'd': e.atom = Expr::Atom::Partial; e.index = index_after(e.pos); return e;
            case 's': e.atom = Expr::Atom::Integ; e.index = index_after(e.pos); return e;
            case 'H':
                if (i_ < s_.size() && s_[i_] == 's') {
                    ++i_;
                    e.atom = Expr::Atom::Hs;
                    expect('(');
                    e.index = index_after(e.pos);
                    expect(',');
                    e.ints.push_back(integer());
                    expect(')');
                    if (e.ints[0] < 1) throw SyntaxError("Hs(i,j) needs j >= 1", e.pos);
                    return e;
                }
                e.atom = Expr::Atom::H;
                e.index = index_after(e.pos);
                return e;
            case 'p':
            case 'q':
                e.atom = c == 'p' ? Expr::Atom::P : Expr::Atom::Q;
                expect('(');
                e.index = index_after(e.pos);
                expect(',');
                e.ints.push_back(integer());
                expect(')');
                return e;
            case 'E':
                if (accept('(')) {
                    e.atom = Expr::Atom::E;
                    e.index = index_after(e.pos);
                    expect(',');
                    e.ints.push_back(integer());
                    expect(',');
                    e.ints.push_back(integer());
                    expect(')');
                    return e;
                }
                if (accept('[')) {
                    e.atom = Expr::Atom::EMulti;
                    std::vector<long> a, b;
                    a.push_back(integer());
                    while (accept(',')) a.push_back(integer());
                    expect(';');
                    b.push_back(integer());
                    while (accept(',')) b.push_back(integer());
                    expect(']');
                    if (a.size() != b.size()) throw SyntaxError("E[alpha;beta] needs equal lengths", e.pos);
                    e.ints = a;
                    e.ints.insert(e.ints.end(), b.begin(), b.end());
                    return e;
                }
                fail("expected '(' or '[' after E");
            case 'D': {
                e.atom = Expr::Atom::D;
                e.index = index_after(e.pos);
                expect('[');
                RatFunc r = rf_sum();
                std::map<long, Rat> exc;
                if (accept('|')) {
                    do {
                        long k = integer();
                        expect(':');
                        exc[k] = signed_number();
                    } while (accept(','));
                }
                expect(']');
                try {
                    e.seq = std::make_shared<EvSeq>(r, exc);
                } catch (const Error& err) {
                    throw SyntaxError(std::string("bad sequence: ") + err.what(), e.pos);
                }
                return e;
            }
            default:
                --i_;
                fail("unexpected '" + std::string(1, c) + "'");
        }
    }

    RatFunc rf_sum() {
        bool neg = accept('-');
        RatFunc r = rf_product();
        if (neg) r = r * RatFunc(Rat(-1));
        while (true) {
            if (accept('+'))
                r = r + rf_product();
            else if (accept('-'))
                r = r - rf_product();
            else
                return r;
        }
    }

    RatFunc rf_product() {
        RatFunc r = rf_power();
        while (true) {
            if (accept('*')) {
                r = r * rf_power();
            } else if (accept('/')) {
                std::size_t at = i_;
                RatFunc d = rf_power();
                if (d.is_zero()) throw SyntaxError("division by zero", at);
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatFunc rf_power() {
        RatFunc b = rf_primary();
        if (!accept('^')) return b;
        std::size_t at = i_;
        long k = integer();
        if (k < 0) {
            if (b.is_zero()) throw SyntaxError("zero to a negative power", at);
            b = b.inverse();
            k = -k;
        }
        RatFunc r(Rat(1));
        for (long j = 0; j < k; ++j) r = r * b;
        return r;
    }

    RatFunc rf_primary() {
        skip();
        if (accept('(')) {
            RatFunc r = rf_sum();
            expect(')');
            return r;
        }
        if (accept('H')) return RatFunc::H();
        if (accept('-')) return rf_power() * RatFunc(Rat(-1));
        if (digit_next()) return RatFunc(number());
        fail("expected H, a number or '('");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

void check_index(const Expr& e, int n) {
    if (e.index < 1 || e.index > n)
        throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(e.index) + " outside 1.." + std::to_string(n) +
                                                    " at position " + std::to_string(e.pos));
}

AElem atom_value(const Expr& e, int n) {
    using A = Expr::Atom;
    if (e.atom == A::Number) return AElem::scalar(n, e.value);
    if (e.atom == A::EMulti) {
        std::size_t k = e.ints.size() / 2;
        if (static_cast<int>(k) != n)
            throw Error(ErrorKind::ArityMismatch, "E[alpha;beta] has length " + std::to_string(k) + ", arity is " +
                                                      std::to_string(n));
        for (long v : e.ints)
            if (v < 0) throw Error(ErrorKind::IndexOutOfRange, "matrix unit indices must be >= 0");
        return gen::E(Degree(e.ints.begin(), e.ints.begin() + k), Degree(e.ints.begin() + k, e.ints.end()));
    }
    check_index(e, n);
    switch (e.atom) {
        case A::X: return gen::x(n, e.index);
        case A::Y: return gen::y(n, e.index);
        case A::H: return gen::H(n, e.index);
        case A::Hs: return gen::Hs(n, e.index, e.ints[0]);
        case A::E: return gen::E(n, e.index, e.ints[0], e.ints[1]);
        case A::Partial: return gen::partial(n, e.index);
        case A::Integ: return gen::integ(n, e.index);
        case A::P:
        case A::Q:
            if (e.ints[0] < 0) throw Error(ErrorKind::IndexOutOfRange, "p/q need d >= 0");
            return e.atom == A::P ? gen::p(n, e.index, e.ints[0]) : gen::q(n, e.index, e.ints[0]);
        case A::D: return gen::d(n, e.index, *e.seq);
        default: break;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown atom");
}

bool invertible_atom(const Expr& e) {
    return e.kind == Expr::Kind::Atom &&
           (e.atom == Expr::Atom::H || e.atom == Expr::Atom::Hs ||
            (e.atom == Expr::Atom::Number && e.value != 0));
}

AElem inverse_atom(const Expr& e, int n) {
    switch (e.atom) {
        case Expr::Atom::Number: return AElem::scalar(n, 1 / e.value);
        case Expr::Atom::H: check_index(e, n); return gen::Hinv(n, e.index);
        default: check_index(e, n); return gen::d(n, e.index, hs_atom(e.ints[0]).inverse());
    }
}

void arity_walk(const Expr& e, int& m) {
    if (e.kind != Expr::Kind::Atom) {
        for (const auto& a : e.args) arity_walk(a, m);
        return;
    }
    if (e.atom == Expr::Atom::EMulti)
        m = std::max(m, static_cast<int>(e.ints.size() / 2));
    else if (e.atom != Expr::Atom::Number)
        m = std::max(m, e.index);
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse_all(); }

RatFunc parse_ratfunc(const std::string& text) { return Parser(text).ratfunc_all(); }

int expr_arity(const Expr& e) {
    int m = 0;
    arity_walk(e, m);
    return m;
}

AElem elaborate(const Expr& e, int n) {
    switch (e.kind) {
        case Expr::Kind::Atom: return atom_value(e, n);
        case Expr::Kind::Neg: return -elaborate(e.args[0], n);
        case Expr::Kind::Sum: {
            AElem r(n);
            for (const auto& a : e.args) r += elaborate(a, n);
            return r;
        }
        case Expr::Kind::Product: {
            AElem r = gen::one(n);
            for (const auto& a : e.args) r = r * elaborate(a, n);
            return r;
        }
        case Expr::Kind::Power: {
            const Expr& b = e.args[0];
            if (e.power < 0) {
                if (!invertible_atom(b))
                    throw Error(ErrorKind::NonInvertiblePower,
                                "negative power of a non-invertible factor at position " + std::to_string(e.pos));
                return inverse_atom(b, n).pow(static_cast<unsigned>(-e.power));
            }
            return elaborate(b, n).pow(static_cast<unsigned>(e.power));
        }
    }
    return AElem(n);
}

std::string print_elem(const AElem& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [alpha, d] : a.comps()) {
        if (!first) os << " + ";
        first = false;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            os << (alpha[i] > 0 ? "x" : "y") << i + 1;
            if (std::abs(alpha[i]) != 1) os << "^" << std::abs(alpha[i]);
            os << "*";
        }
        os << "(" << d.to_string() << ")";
    }
    return os.str();
}

}  // namespace jgwa
