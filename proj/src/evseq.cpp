#include "jgwa/evseq.hpp"

#include <sstream>

#include "jgwa/error.hpp"

namespace jgwa {

EvSeq::EvSeq(RatFunc r, std::map<long, Rat> exc) : r_(std::move(r)), exc_(std::move(exc)) {
    for (const auto& [k, v] : exc_)
        if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative exception position");
    if (r_.den().degree() > 0)
        for (long k : r_.positive_poles())
            if (!exc_.count(k))
                throw Error(ErrorKind::InvalidArgument,
                            "pole of " + r_.to_string() + " at position " + std::to_string(k) +
                                " has no exceptional value");
    canonicalize();
}

EvSeq EvSeq::delta(long k) {
    EvSeq d;
    d.exc_[k] = 1;
    return d;
}

EvSeq EvSeq::mask_from(long t) {
    EvSeq d(1);
    for (long k = 0; k < t; ++k) d.exc_[k] = 0;
    return d;
}

void EvSeq::canonicalize() {
    for (auto it = exc_.begin(); it != exc_.end();) {
        auto v = r_.eval(Rat(it->first + 1));
        if (v && *v == it->second)
            it = exc_.erase(it);
        else
            ++it;
    }
}

Rat EvSeq::at(long k) const {
    auto it = exc_.find(k);
    if (it != exc_.end()) return it->second;
    return *r_.eval(Rat(k + 1));
}

template <class Op>
EvSeq EvSeq::combine(const EvSeq& a, const EvSeq& b, RatFunc r, Op op) {
    EvSeq out;
    out.r_ = std::move(r);
    // poles of the combination lie among the poles of the inputs
    for (const auto& [k, v] : a.exc_) out.exc_.emplace(k, op(v, b.at(k)));
    for (const auto& [k, v] : b.exc_)
        if (!a.exc_.count(k)) out.exc_.emplace(k, op(a.at(k), v));
    out.canonicalize();
    return out;
}

EvSeq& EvSeq::operator+=(const EvSeq& o) {
    if (o.is_zero()) return *this;
    return *this = combine(*this, o, r_ + o.r_, [](const Rat& x, const Rat& y) { return Rat(x + y); });
}

EvSeq& EvSeq::operator-=(const EvSeq& o) {
    if (o.is_zero()) return *this;
    return *this = combine(*this, o, r_ - o.r_, [](const Rat& x, const Rat& y) { return Rat(x - y); });
}

EvSeq& EvSeq::operator*=(const EvSeq& o) {
    if (o.is_one()) return *this;
    if (is_one()) return *this = o;
    return *this = combine(*this, o, r_ * o.r_, [](const Rat& x, const Rat& y) { return Rat(x * y); });
}

EvSeq& EvSeq::operator*=(const Rat& c) {
    if (c == 0) return *this = EvSeq();
    r_ *= RatFunc(c);
    for (auto& [k, v] : exc_) v *= c;
    return *this;
}

EvSeq EvSeq::shift(long s) const {
    if (s == 0) return *this;
    EvSeq out;
    out.r_ = r_.shifted(s);
    for (const auto& [k, v] : exc_)
        if (k - s >= 0) out.exc_.emplace(k - s, v);
    for (long k = 0; k < -s; ++k) out.exc_[k] = 0;
    out.canonicalize();
    return out;
}

EvSeq EvSeq::drop_below(long lo) const {
    if (lo <= 0 || exc_.empty() || exc_.begin()->first >= lo) return *this;
    EvSeq out = *this;
    for (auto it = out.exc_.begin(); it != out.exc_.end() && it->first < lo;) {
        if (r_.is_pole(Rat(it->first + 1))) {
            it->second = 0;
            ++it;
        } else {
            it = out.exc_.erase(it);
        }
    }
    return out;
}

EvSeq EvSeq::inverse() const {
    EvSeq out;
    out.r_ = r_.inverse();
    for (const auto& [k, v] : exc_) {
        if (v == 0) throw Error(ErrorKind::NotInvertible, "sequence vanishes at " + std::to_string(k));
        out.exc_.emplace(k, 1 / v);
    }
    // zeros of r that are not exceptions make the inverse undefined there
    for (long k : out.r_.positive_poles()) {
        if (!out.exc_.count(k))
            throw Error(ErrorKind::NotInvertible, "sequence vanishes at " + std::to_string(k));
    }
    out.canonicalize();
    return out;
}

std::string EvSeq::to_string() const {
    std::ostringstream os;
    os << r_.to_string();
    if (!exc_.empty()) {
        os << "|";
        bool first = true;
        for (const auto& [k, v] : exc_) {
            if (!first) os << ",";
            first = false;
            os << k << ":" << v.get_str();
        }
    }
    return os.str();
}

int compare(const EvSeq& a, const EvSeq& b) {
    if (int c = compare(a.r(), b.r())) return c;
    auto ia = a.exc().begin(), ib = b.exc().begin();
    for (; ia != a.exc().end() && ib != b.exc().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (int c = cmp(ia->second, ib->second)) return c < 0 ? -1 : 1;
    }
    if (ia != a.exc().end()) return 1;
    if (ib != b.exc().end()) return -1;
    return 0;
}

}  // namespace jgwa
