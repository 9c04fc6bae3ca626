#include "jgwa/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>

#include "jgwa/error.hpp"
#include "jgwa/random.hpp"

namespace jgwa {

int subset_size(Subset s) { return std::popcount(s); }

namespace {

bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

void sort_members(std::vector<Subset>& m) {
    // lexicographic on the sorted element lists
    auto key = [](Subset s) {
        std::vector<int> v;
        for (int i = 0; i < 32; ++i)
            if (s >> i & 1) v.push_back(i);
        return v;
    };
    std::sort(m.begin(), m.end(), [&](Subset a, Subset b) { return key(a) < key(b); });
}

void check_n(int n) {
    if (n < 1 || n > kMaxLatticeN)
        throw Error(ErrorKind::IndexOutOfRange, "n must lie in 1.." + std::to_string(kMaxLatticeN));
}

}  // namespace

std::string subset_to_string(Subset s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (s >> i & 1) {
            if (!first) os << ",";
            first = false;
            os << i + 1;
        }
    os << "}";
    return os.str();
}

IdealAC::IdealAC(int n, std::vector<Subset> members) : n_(n), m_(std::move(members)) {
    check_n(n);
    if (m_.empty()) throw Error(ErrorKind::InvalidArgument, "an ideal needs at least one minimal prime");
    Subset full = n == 32 ? ~Subset(0) : (Subset(1) << n) - 1;
    for (Subset s : m_) {
        if (s == 0) throw Error(ErrorKind::InvalidArgument, "empty subset does not name a prime");
        if (!subset_of(s, full)) throw Error(ErrorKind::IndexOutOfRange, "subset outside 1..n");
    }
    for (std::size_t i = 0; i < m_.size(); ++i)
        for (std::size_t j = 0; j < m_.size(); ++j)
            if (i != j && subset_of(m_[i], m_[j]))
                throw Error(ErrorKind::NotAntichain, subset_to_string(m_[i]) + " lies in " + subset_to_string(m_[j]));
    sort_members(m_);
}

std::string IdealAC::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < m_.size(); ++i) s += (i ? "," : "") + subset_to_string(m_[i]);
    return s;
}

namespace {

std::vector<std::vector<int>> parse_sets(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& m) { throw SyntaxError(m, i); };
    skip();
    if (i == text.size()) fail("empty antichain");
    while (true) {
        skip();
        if (i >= text.size() || text[i] != '{') fail("expected '{'");
        ++i;
        std::vector<int> set;
        skip();
        while (i < text.size() && text[i] != '}') {
            skip();
            std::size_t b = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (b == i || i - b > 6) fail("expected an index");
            set.push_back(std::stoi(text.substr(b, i - b)));
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i >= text.size() || text[i] != '}') fail("expected ',' or '}'");
        }
        if (i >= text.size()) fail("unterminated subset");
        ++i;
        out.push_back(set);
        skip();
        if (i == text.size()) break;
        if (text[i] != ',') fail("expected ',' between subsets");
        ++i;
    }
    return out;
}

}  // namespace

int antichain_arity(const std::string& text) {
    int m = 0;
    for (const auto& s : parse_sets(text))
        for (int v : s) m = std::max(m, v);
    return m;
}

IdealAC parse_antichain(const std::string& text, int n) {
    check_n(n);
    std::vector<Subset> members;
    for (const auto& s : parse_sets(text)) {
        Subset b = 0;
        for (int v : s) {
            if (v < 1 || v > n)
                throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(v) + " outside 1.." + std::to_string(n));
            b |= Subset(1) << (v - 1);
        }
        if (std::find(members.begin(), members.end(), b) == members.end()) members.push_back(b);
    }
    return IdealAC(n, members);
}

std::vector<Subset> minimal_elements(std::vector<Subset> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<Subset> out;
    for (Subset a : s) {
        bool minimal = true;
        for (Subset b : s)
            if (b != a && subset_of(b, a)) minimal = false;
        if (minimal) out.push_back(a);
    }
    return out;
}

namespace {
void same_n(const IdealAC& a, const IdealAC& b) {
    if (a.n() != b.n()) throw Error(ErrorKind::ArityMismatch, "ideals over different n");
}
}  // namespace

IdealAC ideal_product(const IdealAC& a, const IdealAC& b) {
    same_n(a, b);
    std::vector<Subset> u = a.members();
    u.insert(u.end(), b.members().begin(), b.members().end());
    return IdealAC(a.n(), minimal_elements(u));
}

IdealAC ideal_sum(const IdealAC& a, const IdealAC& b) {
    same_n(a, b);
    std::vector<Subset> u;
    for (Subset i : a.members())
        for (Subset j : b.members()) u.push_back(i | j);
    return IdealAC(a.n(), minimal_elements(u));
}

bool contains(const IdealAC& a, const IdealAC& b) {
    same_n(a, b);
    for (Subset J : a.members())
        if (std::none_of(b.members().begin(), b.members().end(), [&](Subset I) { return subset_of(I, J); }))
            return false;
    return true;
}

Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

namespace {

// Backtracking over images of 0..k-1; a member is checked once all its points are placed.
class StabSearch {
public:
    StabSearch(int n, std::vector<Subset> fam, std::vector<int> weight, bool list)
        : n_(n), fam_(std::move(fam)), weight_(std::move(weight)), list_(list), img_(n, -1), used_(n) {
        std::sort(fam_.begin(), fam_.end());
        // members become checkable at the position of their largest point
        due_.resize(n);
        for (Subset s : fam_) due_[31 - std::countl_zero(s)].push_back(s);
        sig_.resize(n);
        for (int p = 0; p < n; ++p) {
            for (Subset s : fam_)
                if (s >> p & 1) sig_[p].push_back(subset_size(s));
            std::sort(sig_[p].begin(), sig_[p].end());
        }
    }

    Int run() {
        go(0);
        return count_;
    }
    std::vector<std::vector<int>> elements;

private:
    void go(int p) {
        if (p == n_) {
            count_ += 1;
            if (list_) elements.push_back(img_);
            return;
        }
        for (int q = 0; q < n_; ++q) {
            if (used_[q] || sig_[q] != sig_[p] || weight_[q] != weight_[p]) continue;
            img_[p] = q;
            used_[q] = true;
            bool ok = true;
            for (Subset s : due_[p]) {
                Subset t = 0;
                for (int i = 0; i <= p; ++i)
                    if (s >> i & 1) t |= Subset(1) << img_[i];
                if (!std::binary_search(fam_.begin(), fam_.end(), t)) {
                    ok = false;
                    break;
                }
            }
            if (ok) go(p + 1);
            used_[q] = false;
        }
        img_[p] = -1;
    }

    int n_;
    std::vector<Subset> fam_;
    std::vector<int> weight_;
    bool list_;
    std::vector<int> img_;
    std::vector<bool> used_;
    std::vector<std::vector<Subset>> due_;
    std::vector<std::vector<int>> sig_;
    Int count_ = 0;
};

}  // namespace

Stabilizer stabilizer(const IdealAC& a, bool list) {
    const int n = a.n();
    Stabilizer st;
    if (list) {
        if (n > 10) throw Error(ErrorKind::InvalidArgument, "listing stabilizer elements needs n <= 10");
        StabSearch s(n, a.members(), std::vector<int>(n, 1), true);
        st.order = s.run();
        st.elements = std::move(s.elements);
    } else {
        // points with the same membership pattern are interchangeable; search on the classes
        std::map<std::vector<int>, std::vector<int>> classes;
        for (int p = 0; p < n; ++p) {
            std::vector<int> pattern;
            for (std::size_t k = 0; k < a.members().size(); ++k)
                if (a.members()[k] >> p & 1) pattern.push_back(static_cast<int>(k));
            classes[pattern].push_back(p);
        }
        std::vector<int> rep(n), weight;
        int c = 0;
        Int twins = 1;
        for (const auto& [pattern, pts] : classes) {
            for (int p : pts) rep[p] = c;
            weight.push_back(static_cast<int>(pts.size()));
            twins *= factorial(static_cast<int>(pts.size()));
            ++c;
        }
        std::vector<Subset> fam;
        for (Subset s : a.members()) {
            Subset t = 0;
            for (int p = 0; p < n; ++p)
                if (s >> p & 1) t |= Subset(1) << rep[p];
            fam.push_back(t);
        }
        StabSearch s(c, fam, weight, false);
        st.order = s.run() * twins;
    }
    st.index = factorial(n) / st.order;
    return st;
}

std::optional<GenericStructure> generic_structure(const IdealAC& a) {
    Subset seen = 0;
    std::map<int, int> by_size;
    for (Subset s : a.members()) {
        if (s & seen) return std::nullopt;
        seen |= s;
        ++by_size[subset_size(s)];
    }
    GenericStructure g;
    g.m = a.n() - subset_size(seen);
    g.order = factorial(g.m);
    for (auto [h, k] : by_size) {
        g.profile.emplace_back(h, k);
        Int hf = factorial(h), p = 1;
        for (int t = 0; t < k; ++t) p *= hf;
        g.order *= p * factorial(k);
    }
    return g;
}

std::vector<IdealAC> invariant_ideals(int n) {
    check_n(n);
    std::vector<IdealAC> out;
    for (int s = 1; s <= n; ++s) {
        std::vector<Subset> m;
        for (Subset b = 1; b < (Subset(1) << n); ++b)
            if (subset_size(b) == s) m.push_back(b);
        out.emplace_back(n, m);
    }
    return out;
}

namespace {
void antichains_from(Subset next, Subset end, std::vector<Subset>& cur, int n, std::vector<IdealAC>& out) {
    for (Subset s = next; s < end; ++s) {
        bool ok = std::none_of(cur.begin(), cur.end(), [&](Subset t) { return subset_of(s, t) || subset_of(t, s); });
        if (!ok) continue;
        cur.push_back(s);
        out.emplace_back(n, cur);
        antichains_from(s + 1, end, cur, n, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<IdealAC> all_antichains(int n) {
    if (n < 1 || n > 5) throw Error(ErrorKind::InvalidArgument, "exhaustive antichain listing needs 1 <= n <= 5");
    std::vector<IdealAC> out;
    std::vector<Subset> cur;
    antichains_from(1, Subset(1) << n, cur, n, out);
    return out;
}

std::size_t prime_count(int n) {
    check_n(n);
    std::size_t primes = 1;  // zero ideal
    for (Subset b = 1; b < (Subset(1) << n); ++b)
        if (IdealAC(n, {b}).is_prime()) ++primes;
    return primes;
}

IdealAC random_antichain(Gen& g, int n) {
    check_n(n);
    std::vector<Subset> s;
    long k = g.integer(1, n + 1);
    for (long t = 0; t < k; ++t) {
        Subset b = 0;
        while (b == 0)
            for (int i = 0; i < n; ++i)
                if (g.coin(0.4)) b |= Subset(1) << i;
        s.push_back(b);
    }
    return IdealAC(n, minimal_elements(s));
}

}  // namespace jgwa
