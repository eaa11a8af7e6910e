#include "decforge/errors.hpp"
#include "decforge/group.hpp"
#include "decforge/qz.hpp"

#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

using namespace decforge;

// ===========================================================================
// brute-force oracles (element enumeration only, no lattice arithmetic)
// ===========================================================================

namespace {

std::int64_t brute_element_order(const FinAbGroup& g, const Elem& e) {
    Elem acc = g.zero();
    std::int64_t n = 0;
    do {
        acc = g.add(acc, e);
        ++n;
    } while (acc != g.zero());
    return n;
}

std::int64_t brute_exponent(const FinAbGroup& g) {
    std::int64_t m = 1;
    for (const Elem& e : g.elements())
        m = std::max(m, brute_element_order(g, e));
    return m;
}

std::set<Elem> brute_closure(const FinAbGroup& g, const std::vector<Elem>& gens) {
    std::set<Elem> out{g.zero()};
    for (;;) {
        std::set<Elem> next = out;
        for (const Elem& a : out)
            for (const Elem& b : gens) next.insert(g.add(a, b));
        if (next == out) return out;
        out = std::move(next);
    }
}

std::set<Elem> subgroup_elems(const Subgroup& s) {
    auto v = s.elements();
    return {v.begin(), v.end()};
}

std::set<Elem> brute_perp(const Subgroup& h) {
    const FinAbGroup& g = h.parent();
    std::set<Elem> out;
    for (const Elem& a : g.elements()) {
        bool ann = true;
        for (const Elem& x : h.elements()) {
            QZ s;
            for (std::size_t i = 0; i < a.size(); ++i)
                s = s + QZ(a[i] * x[i], g.factors()[i]);
            if (!s.is_zero()) {
                ann = false;
                break;
            }
        }
        if (ann) out.insert(a);
    }
    return out;
}

// all subgroups of g, found by closing generator extensions
std::vector<Subgroup> all_subgroups(const FinAbGroup& g) {
    std::map<ZMat, Subgroup> seen;
    std::vector<Subgroup> queue{Subgroup::trivial(g)};
    seen.emplace(queue[0].lattice(), queue[0]);
    auto elems = g.elements();
    while (!queue.empty()) {
        Subgroup s = queue.back();
        queue.pop_back();
        for (const Elem& e : elems) {
            auto gens = s.canonical_generators();
            gens.push_back(e);
            Subgroup s2(g, gens);
            if (seen.emplace(s2.lattice(), s2).second) queue.push_back(s2);
        }
    }
    std::vector<Subgroup> out;
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

// all invariant-factor chains with product <= cap
void divisor_chains(std::int64_t cap, std::vector<std::int64_t>& cur,
                    std::vector<std::vector<std::int64_t>>& out) {
    std::int64_t prod = 1;
    for (auto t : cur) prod *= t;
    std::int64_t top = cur.empty() ? cap : cur.back();
    for (std::int64_t t = 2; t <= top; ++t) {
        if (!cur.empty() && cur.back() % t != 0) continue;
        if (prod * t > cap) continue;
        cur.push_back(t);
        out.push_back(cur);
        divisor_chains(cap, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<std::int64_t>> groups_up_to(std::int64_t cap) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    divisor_chains(cap, cur, out);
    return out;
}

} // namespace

// ===========================================================================
// QZ arithmetic
// ===========================================================================

TEST_CASE("QZ reduces into [0,1) and adds exactly") {
    CHECK(QZ(3, 4) + QZ(1, 2) == QZ(1, 4));
    CHECK(QZ(-1, 4) == QZ(3, 4));
    CHECK(QZ(7, 1).is_zero());
    CHECK(QZ(5, 10) == QZ(1, 2));
    CHECK((-QZ(1, 4)) == QZ(3, 4));
    CHECK(QZ(1, 6).order() == 6);
    CHECK(QZ(1, 6).times(3) == QZ(1, 2));
    CHECK(QZ::parse("3/4") == QZ(3, 4));
    CHECK(QZ(0, 5).str() == "0/1");
    CHECK(QZ(5, 20).str() == "1/4");
    CHECK_THROWS_AS(QZ(1, 0), DomainError);
}

// ===========================================================================
// group construction and element arithmetic
// ===========================================================================

TEST_CASE("invariant factor normalization") {
    CHECK(FinAbGroup({4, 2}).factors() == std::vector<std::int64_t>{4, 2});
    // Z6 x Z4 = Z12 x Z2
    CHECK(FinAbGroup({6, 4}).factors() == std::vector<std::int64_t>{12, 2});
    CHECK(FinAbGroup({2, 4}).factors() == std::vector<std::int64_t>{4, 2});
    CHECK(FinAbGroup({1, 1}).factors().empty());
    CHECK(FinAbGroup().order() == 1);
    CHECK(FinAbGroup().exponent() == 1);
    CHECK_THROWS_AS(FinAbGroup({0}), DomainError);
    CHECK_THROWS_AS(FinAbGroup({1 << 11, 1 << 11}), DomainError);
}

TEST_CASE("exponent and element orders match enumeration") {
    FinAbGroup g({6, 4}); // normalizes to [12, 2]
    CHECK(g.exponent() == 12);
    CHECK(g.exponent() == brute_exponent(g));
    FinAbGroup h({4, 2});
    CHECK(h.element_order({2, 1}) == 2);
    CHECK(h.element_order({1, 1}) == 4);
    for (const Elem& e : h.elements())
        CHECK(h.element_order(e) == brute_element_order(h, e));
    CHECK(h.elements().size() == 8);
}

// ===========================================================================
// subgroups: membership, join, meet, quotient
// ===========================================================================

TEST_CASE("subgroup order, structure and membership") {
    FinAbGroup g({4, 2});
    Subgroup h(g, {{2, 0}, {0, 1}});
    CHECK(h.order() == 4);
    CHECK(h.invariant_factors() == std::vector<std::int64_t>{2, 2});
    CHECK(h.exponent() == 2);
    CHECK(h.contains({2, 1}));
    CHECK(!h.contains({1, 0}));
    CHECK(subgroup_elems(h) == brute_closure(g, {{2, 0}, {0, 1}}));

    Subgroup c(g, {{1, 1}});
    CHECK(c.order() == 4);
    CHECK(c.is_cyclic());
    CHECK(c.canonical_generator() == Elem{1, 1});
}

TEST_CASE("join and meet agree with enumeration") {
    FinAbGroup g({4, 2});
    Subgroup a(g, {{1, 0}});
    Subgroup b(g, {{1, 1}});
    Subgroup m = meet(a, b);
    // intersection of <(1,0)> and <(1,1)> is <(2,0)>
    CHECK(m == Subgroup(g, {{2, 0}}));
    std::set<Elem> ea = subgroup_elems(a), eb = subgroup_elems(b), expect;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                          std::inserter(expect, expect.begin()));
    CHECK(subgroup_elems(m) == expect);
    CHECK(join(a, b) == Subgroup::full(g));

    for (auto factors : groups_up_to(16)) {
        FinAbGroup gg(factors);
        auto subs = all_subgroups(gg);
        for (const auto& s : subs) {
            CHECK(static_cast<std::size_t>(s.order()) == s.elements().size());
            CHECK(subgroup_elems(s) ==
                  brute_closure(gg, s.canonical_generators()));
        }
    }
}

TEST_CASE("quotient invariant factors") {
    FinAbGroup g({4, 2});
    CHECK(quotient_invariant_factors(Subgroup(g, {{2, 0}})) ==
          std::vector<std::int64_t>{2, 2});
    CHECK(quotient_invariant_factors(Subgroup(g, {{1, 0}})) ==
          std::vector<std::int64_t>{2});
    CHECK(quotient_invariant_factors(Subgroup::full(g)).empty());
    CHECK(quotient_invariant_factors(Subgroup::trivial(g)) ==
          std::vector<std::int64_t>{4, 2});
}

// ===========================================================================
// characters
// ===========================================================================

TEST_CASE("characters pair against elements") {
    FinAbGroup g({4, 2});
    Character chi = Character::from_tuple(g, {1, 0});
    CHECK(chi.values == std::vector<QZ>{QZ(1, 4), QZ(0, 1)});
    CHECK(chi.order() == 4);
    CHECK(chi.eval({1, 1}) == QZ(1, 4));
    CHECK(chi.eval({2, 1}) == QZ(1, 2));
    CHECK(chi.tuple() == Elem{1, 0});
    CHECK_THROWS_AS(Character(g, {QZ(1, 3), QZ(0, 1)}), DomainError);
}

// ===========================================================================
// perp duality
// ===========================================================================

TEST_CASE("perp matches the enumeration oracle on small groups") {
    for (auto factors : groups_up_to(16)) {
        FinAbGroup g(factors);
        for (const Subgroup& h : all_subgroups(g)) {
            Subgroup p = perp(h);
            CHECK(subgroup_elems(p) == brute_perp(h));
            CHECK(p.order() * h.order() == g.order());
            CHECK(perp(p) == h);
        }
    }
}

TEST_CASE("perp swaps join and meet") {
    for (auto factors : groups_up_to(32)) {
        FinAbGroup g(factors);
        auto subs = all_subgroups(g);
        std::vector<Subgroup> perps;
        perps.reserve(subs.size());
        for (const auto& s : subs) perps.push_back(perp(s));
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i; j < subs.size(); ++j) {
                CHECK(perp(join(subs[i], subs[j])) == meet(perps[i], perps[j]));
            }
    }
}

// ===========================================================================
// cyclic decompositions
// ===========================================================================

TEST_CASE("primary decomposition of Z4 x Z2") {
    FinAbGroup g({4, 2});
    auto pd = primary_decomposition_with_complement(g);
    REQUIRE(pd.h.size() == 2);
    CHECK(pd.h[0] == Subgroup(g, {{1, 0}}));
    CHECK(pd.h[1] == Subgroup(g, {{1, 1}}));
    CHECK(pd.d == Subgroup(g, {{0, 1}}));
}

TEST_CASE("perp decomposition of Z4 x Z2") {
    FinAbGroup g({4, 2});
    auto qd = perp_decomposition(g);
    REQUIRE(qd.k.size() == 2);
    CHECK(qd.k[0] == Subgroup(g, {{0, 1}}));
    CHECK(qd.k[1] == Subgroup(g, {{2, 1}}));
    CHECK(qd.d_prime == Subgroup(g, {{1, 0}}));
}

TEST_CASE("decomposition postconditions hold for every group of order <= 64") {
    for (auto factors : groups_up_to(64)) {
        FinAbGroup g(factors);
        std::int64_t t = g.exponent();

        auto pd = primary_decomposition_with_complement(g);
        Subgroup all = pd.d;
        for (const Subgroup& hi : pd.h) {
            CHECK(hi.is_cyclic());
            CHECK(hi.order() == t);
            CHECK(meet(hi, pd.d).order() == 1);
            CHECK(join(hi, pd.d) == Subgroup::full(g));
            all = join(all, hi);
        }
        CHECK(all == Subgroup::full(g));

        auto qd = perp_decomposition(g);
        Subgroup common = Subgroup::full(g);
        for (const Subgroup& ki : qd.k) {
            auto q = quotient_invariant_factors(ki);
            REQUIRE(q.size() == 1);
            CHECK(q[0] == t);
            CHECK(meet(ki, qd.d_prime).order() == 1);
            common = meet(common, ki);
        }
        CHECK(common.order() == 1);
        CHECK(qd.d_prime.is_cyclic());
        CHECK(qd.d_prime.order() == t);

        CHECK(lcm_of_cyclic_quotients(g, qd.k) == t);
    }
}

TEST_CASE("lcm_of_cyclic_quotients rejects bad input") {
    FinAbGroup g({4, 2});
    CHECK_THROWS_AS(primary_decomposition_with_complement(FinAbGroup()),
                    DomainError);
    // both subgroups contain (2,0), so the meet is nontrivial
    std::vector<Subgroup> ks{Subgroup(g, {{2, 0}}), Subgroup(g, {{2, 0}})};
    CHECK_THROWS_AS(lcm_of_cyclic_quotients(g, ks), DomainError);
    // quotient by the trivial subgroup of Z4 x Z2 is not cyclic
    std::vector<Subgroup> ks2{Subgroup::trivial(g)};
    CHECK_THROWS_AS(lcm_of_cyclic_quotients(g, ks2), DomainError);
}
