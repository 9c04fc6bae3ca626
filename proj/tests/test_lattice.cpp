#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "jgwa/error.hpp"
#include "jgwa/lattice.hpp"
#include "jgwa/random.hpp"

using namespace jgwa;

namespace {

Subset image(Subset s, const std::vector<int>& p) {
    Subset t = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (s >> i & 1) t |= Subset(1) << p[i];
    return t;
}

std::vector<std::vector<int>> brute_stab(const IdealAC& a) {
    std::vector<int> p(a.n());
    std::iota(p.begin(), p.end(), 0);
    std::set<Subset> fam(a.members().begin(), a.members().end());
    std::vector<std::vector<int>> out;
    do {
        std::set<Subset> img;
        for (Subset s : a.members()) img.insert(image(s, p));
        if (img == fam) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// primes p_S containing the ideal: S contains some member
std::vector<bool> upset(const IdealAC& a) {
    std::vector<bool> u(std::size_t(1) << a.n());
    for (Subset s = 1; s < u.size(); ++s)
        for (Subset m : a.members())
            if ((m & ~s) == 0) u[s] = true;
    return u;
}

IdealAC ac(const std::string& s, int n) { return parse_antichain(s, n); }

}  // namespace

TEST_CASE("antichain parsing and printing") {
    CHECK(ac("{2,3},{1}", 3).to_string() == "{1},{2,3}");
    CHECK(antichain_arity("{1},{2,5}") == 5);
    CHECK_THROWS_AS(ac("{1},{1,2}", 2), Error);
    try {
        ac("{1},{1,2}", 2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAntichain);
    }
    CHECK_THROWS_AS(ac("{1},{3}", 2), Error);
    CHECK_THROWS_AS(ac("{1", 2), SyntaxError);
    CHECK_THROWS_AS(ac("{}", 2), Error);
}

TEST_CASE("product and sum examples") {
    CHECK(ideal_product(ac("{1}", 2), ac("{2}", 2)) == ac("{1},{2}", 2));
    CHECK(ideal_sum(ac("{1}", 2), ac("{2}", 2)) == ac("{1,2}", 2));
    IdealAC a = ac("{1},{2,3}", 3);
    CHECK(ideal_product(a, a) == a);
    CHECK(ideal_sum(a, a) == a);
    CHECK(contains(ac("{1,2}", 2), ac("{1}", 2)));
    CHECK(!contains(ac("{1}", 2), ac("{1,2}", 2)));
    CHECK(height(ac("{1,3}", 3).members()[0]) == 2);
    CHECK(!ac("{1},{2}", 2).is_prime());
    IdealAC b = ac("{1},{2}", 3), c = ac("{3}", 3);
    CHECK(ideal_sum(b, c) == ideal_product(ac("{1,3}", 3), ac("{2,3}", 3)));
}

TEST_CASE("lattice operations against the subset model") {
    for (int n = 1; n <= 4; ++n) {
        auto all = all_antichains(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                auto ua = upset(a), ub = upset(b);
                std::vector<bool> uu(ua.size()), ui(ua.size());
                bool sub = true;
                for (std::size_t s = 0; s < ua.size(); ++s) {
                    uu[s] = ua[s] || ub[s];
                    ui[s] = ua[s] && ub[s];
                    if (ua[s] && !ub[s]) sub = false;
                }
                REQUIRE(upset(ideal_product(a, b)) == uu);
                REQUIRE(upset(ideal_sum(a, b)) == ui);
                REQUIRE(contains(a, b) == sub);
                REQUIRE(ideal_product(a, b) == ideal_product(b, a));
            }
    }
}

TEST_CASE("antichain and prime counts") {
    // Dedekind numbers minus the two trivial families
    CHECK(all_antichains(1).size() == 1);
    CHECK(all_antichains(2).size() == 4);
    CHECK(all_antichains(3).size() == 18);
    CHECK(all_antichains(4).size() == 166);
    CHECK(all_antichains(5).size() == 7579);
    for (int n = 1; n <= 6; ++n) CHECK(prime_count(n) == (std::size_t(1) << n));
}

TEST_CASE("stabilizer examples") {
    auto s = stabilizer(ac("{1}", 2));
    CHECK(s.order == 1);
    CHECK(s.index == 2);
    s = stabilizer(ac("{1,2,3}", 3));
    CHECK(s.order == 6);
    CHECK(s.index == 1);
    s = stabilizer(ac("{1},{2},{3,4}", 5), true);
    CHECK(s.order == 4);
    CHECK(s.index == 30);
    CHECK(s.elements.size() == 4);
    auto g = generic_structure(ac("{1},{2},{3,4}", 5));
    REQUIRE(g);
    CHECK(g->m == 1);
    CHECK(g->profile == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
    CHECK(g->order == 4);
    CHECK(!generic_structure(ac("{1,2},{2,3}", 3)));
}

TEST_CASE("stabilizer against brute force") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : all_antichains(n)) {
            auto bf = brute_stab(a);
            auto st = stabilizer(a, true);
            REQUIRE(st.order == Int(bf.size()));
            std::sort(st.elements.begin(), st.elements.end());
            REQUIRE(st.elements == bf);
            REQUIRE(stabilizer(a).order == st.order);
        }
    Gen gen(51);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(gen.integer(5, 6));
        IdealAC a = random_antichain(gen, n);
        CHECK(stabilizer(a).order == Int(brute_stab(a).size()));
    }
}

TEST_CASE("generic ideals follow the wreath formula") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& a : all_antichains(n))
            if (auto g = generic_structure(a)) REQUIRE(stabilizer(a).order == g->order);
}

TEST_CASE("height one primes and invariant ideals") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i < n; ++i) CHECK(stabilizer(IdealAC(n, {Subset(1) << i})).index == n);
    // no set-family stabilizer sits strictly between St(p_1) and S_n
    for (int n = 2; n <= 4; ++n) {
        auto st1 = stabilizer(IdealAC(n, {1}), true).elements;
        std::set<std::vector<int>> h(st1.begin(), st1.end());
        for (const auto& a : all_antichains(n)) {
            auto e = stabilizer(a, true).elements;
            std::set<std::vector<int>> k(e.begin(), e.end());
            bool contains_h = std::includes(k.begin(), k.end(), h.begin(), h.end());
            if (contains_h) CHECK((k.size() == h.size() || k.size() == st1.size() * n));
        }
    }
    CHECK(invariant_ideals(2) == std::vector<IdealAC>{ac("{1},{2}", 2), ac("{1,2}", 2)});
    CHECK(invariant_ideals(1) == std::vector<IdealAC>{ac("{1}", 1)});
    for (int n = 1; n <= 5; ++n) {
        auto inv = invariant_ideals(n);
        CHECK(inv.size() == std::size_t(n));
        std::size_t full = 0, full_primes = 0;
        for (const auto& a : all_antichains(n))
            if (stabilizer(a).index == 1) {
                ++full;
                CHECK(std::find(inv.begin(), inv.end(), a) != inv.end());
                if (a.is_prime()) ++full_primes;
            }
        CHECK(full == std::size_t(n));
        CHECK(full_primes == 1);
    }
}
