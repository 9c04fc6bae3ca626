#include "jgwa/upoly.hpp"

#include <algorithm>
#include <sstream>

#include "jgwa/error.hpp"

namespace jgwa {

std::string to_string(const Rat& q) { return q.get_str(); }

Rat parse_rat(std::string_view s) {
    Rat q;
    if (s.empty() || q.set_str(std::string(s), 10) != 0 || q.get_den() == 0)
        throw Error(ErrorKind::Format, "bad rational '" + std::string(s) + "'");
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& q, long e) {
    Rat base = e < 0 ? Rat(1 / q) : q;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rat r(1);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    r.canonicalize();
    return r;
}

// ---- UPoly

UPoly::UPoly(const Rat& c) {
    if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rat UPoly::operator()(const Rat& h) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * h + *it;
    return acc;
}

UPoly UPoly::shifted(const Rat& s) const {
    if (s == 0 || is_constant()) return *this;
    // Horner in the shifted variable
    UPoly acc;
    UPoly lin = UPoly::linear(s);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= lin;
        acc += UPoly(*it);
    }
    return acc;
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    UPoly r = *this;
    Rat l = lead();
    for (auto& c : r.c_) c /= l;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<Rat> q(a.degree() - b.degree() + 1);
    std::vector<Rat> r = a.c_;
    const Rat& lb = b.lead();
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (r[i] == 0) continue;
        Rat f = r[i] / lb;
        int sh = i - b.degree();
        q[sh] = f;
        for (int j = 0; j <= b.degree(); ++j) r[sh + j] -= f * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// Primitive integer coefficient vector proportional to p.
std::vector<Int> integer_coeffs(const UPoly& p) {
    Int l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> out;
    Int g = 0;
    for (const auto& c : p.coeffs()) {
        Int v = c.get_num() * (l / c.get_den());
        out.push_back(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g != 0)
        for (auto& v : out) v /= g;
    return out;
}

bool is_root(const std::vector<Int>& a, const Int& x) {
    Int acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
    return acc == 0;
}

// divide by (H - x), assuming x is a root
std::vector<Int> deflate(const std::vector<Int>& a, const Int& x) {
    std::vector<Int> q(a.size() - 1);
    Int carry = 0;
    for (std::size_t i = a.size() - 1; i >= 1; --i) {
        carry = carry * x + a[i];
        q[i - 1] = carry;
    }
    return q;
}

}  // namespace

std::vector<std::pair<long, int>> UPoly::integer_roots() const {
    std::vector<std::pair<long, int>> out;
    if (degree() <= 0) return out;
    std::vector<Int> a = integer_coeffs(*this);
    int zero_mult = 0;
    while (a.size() > 1 && a[0] == 0) {
        a.erase(a.begin());
        ++zero_mult;
    }
    if (zero_mult) out.emplace_back(0, zero_mult);
    if (a.size() <= 1) return out;
    // Cauchy bound 1 + max |a_i / a_n|
    Int an = abs(a.back());
    Int bound = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        Int v = abs(a[i]);
        Int q = v / an + 1;
        if (q > bound) bound = q;
    }
    ++bound;
    Int a0 = abs(a[0]);
    if (a0 < bound) bound = a0;
    if (bound > 10000000)
        throw Error(ErrorKind::InvalidArgument, "integer root search bound too large");
    long lim = bound.get_si();
    for (long c = 1; c <= lim && a.size() > 1; ++c) {
        if (!mpz_divisible_ui_p(a[0].get_mpz_t(), static_cast<unsigned long>(c))) continue;
        for (long x : {c, -c}) {
            int m = 0;
            Int xx = x;
            while (a.size() > 1 && is_root(a, xx)) {
                a = deflate(a, xx);
                ++m;
            }
            if (m) out.emplace_back(x, m);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
            continue;
        }
        if (a != 1) os << a.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

int compare(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = cmp(a.coeffs()[i], b.coeffs()[i]);
        if (c) return c < 0 ? -1 : 1;
    }
    return 0;
}

// ---- RatFunc

RatFunc::RatFunc(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = UPoly(1);
        return;
    }
    if (den_.degree() > 0) {
        UPoly g = UPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = UPoly::divmod(num_, g).first;
            den_ = UPoly::divmod(den_, g).first;
        }
    }
    Rat l = den_.lead();
    if (l != 1) {
        Rat inv = 1 / l;
        num_ *= inv;
        den_ *= inv;
    }
}

int RatFunc::degree() const { return num_.degree() - den_.degree(); }

std::optional<Rat> RatFunc::eval(const Rat& h) const {
    Rat d = den_(h);
    if (d == 0) return std::nullopt;
    return num_(h) / d;
}

RatFunc RatFunc::shifted(long s) const {
    if (s == 0) return *this;
    RatFunc r;
    r.num_ = num_.shifted(s);
    r.den_ = den_.shifted(s);
    return r;  // shifting preserves coprimality and monic leading term
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorKind::NotInvertible, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFunc();
    num_ *= o.num_;
    if (!o.den_.is_constant() || den_.degree() > 0) {
        den_ *= o.den_;
        normalize();
    }
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::vector<long> RatFunc::positive_poles() const {
    std::vector<long> out;
    for (auto [x, m] : den_.integer_roots())
        if (x >= 1) out.push_back(x - 1);
    return out;
}

std::string RatFunc::to_string(const std::string& var) const {
    std::string s = "(" + num_.to_string(var) + ")";
    if (den_.degree() > 0) s += "/(" + den_.to_string(var) + ")";
    return s;
}

int compare(const RatFunc& a, const RatFunc& b) {
    if (int c = compare(a.num(), b.num())) return c;
    return compare(a.den(), b.den());
}

}  // namespace jgwa
