#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jgwa/rational.hpp"

namespace jgwa {

// Polynomial in one symbol H over Q. Coefficients low to high, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rat& c);  // NOLINT(implicit)
    UPoly(long c) : UPoly(Rat(c)) {}  // NOLINT(implicit)
    explicit UPoly(std::vector<Rat> coeffs);

    static UPoly H() { return UPoly(std::vector<Rat>{0, 1}); }
    // H + a
    static UPoly linear(const Rat& a) { return UPoly(std::vector<Rat>{a, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Rat coeff(int i) const;
    const Rat& lead() const { return c_.back(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat operator()(const Rat& h) const;
    UPoly shifted(const Rat& s) const;  // p(H+s)
    UPoly monic() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rat& c);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const Rat& c) { return a *= c; }
    UPoly operator-() const;
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // a = q*b + r
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    static UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0

    // Integer roots with multiplicities, ascending.
    std::vector<std::pair<long, int>> integer_roots() const;

    std::string to_string(const std::string& var = "H") const;

private:
    void trim();
    std::vector<Rat> c_;
};

int compare(const UPoly& a, const UPoly& b);

// num/den with gcd 1 and den monic; 0 is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rat& c) : num_(c), den_(1) {}  // NOLINT(implicit)
    RatFunc(long c) : RatFunc(Rat(c)) {}  // NOLINT(implicit)
    RatFunc(const UPoly& p) : num_(p), den_(1) {}  // NOLINT(implicit)
    RatFunc(UPoly num, UPoly den);

    static RatFunc H() { return RatFunc(UPoly::H()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const { return num_.coeff(0); }
    // deg num - deg den
    int degree() const;

    std::optional<Rat> eval(const Rat& h) const;
    bool is_pole(const Rat& h) const { return den_(h) == 0; }
    RatFunc shifted(long s) const;  // r(H+s)
    RatFunc inverse() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // positions k >= 0 whose evaluation point k+1 is a root of den
    std::vector<long> positive_poles() const;

    std::string to_string(const std::string& var = "H") const;

private:
    void normalize();
    UPoly num_, den_;
};

int compare(const RatFunc& a, const RatFunc& b);

}  // namespace jgwa
