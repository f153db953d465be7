#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rcsub/constructions.hpp"
#include "rcsub/predicates.hpp"
#include "rcsub/rc_closure.hpp"

using namespace rcsub;

namespace {

std::vector<std::uint64_t> family_masks(const ClosureFamily& f) {
    std::vector<std::uint64_t> out;
    for (const auto& s : f.closed_sets())
        out.push_back(oracle::to_mask(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Lattice> small_lattices() {
    return {chain(0), chain(1), chain(2), chain(4), boolean(2), boolean(3), m_diamond(3), m_diamond(4), n5(),
            product(chain(2), chain(1)), product(chain(2), chain(2))};
}

} // namespace

TEST_CASE("relative complements") {
    auto b2 = boolean(2);  // atoms 1 and 2
    CHECK(relative_complements(b2, 0, 1, 3) == ElementSet(4, {2}));
    auto c = chain(2);
    CHECK(relative_complements(c, 0, 1, 2).empty());
    for (const auto& L : small_lattices())
        for (ElementId u = 0; u < L.size(); ++u)
            CHECK(relative_complements(L, u, u, u) == ElementSet(L.size(), {u}));
    // Outside u <= x <= v nothing qualifies.
    CHECK(relative_complements(b2, 1, 2, 3).empty());
}

TEST_CASE("is_rc_closed") {
    auto b2 = boolean(2);
    CHECK_FALSE(is_rc_closed(b2, ElementSet(4, {0, 1, 3})));
    CHECK(is_rc_closed(b2, ElementSet(4)));
    for (const auto& L : small_lattices()) {
        for (ElementId x = 0; x < L.size(); ++x)
            CHECK(is_rc_closed(L, ElementSet(L.size(), {x})));
        for (ElementId u = 0; u < L.size(); ++u)
            for (ElementId v = 0; v < L.size(); ++v)
                if (L.leq(u, v))
                    CHECK(is_rc_closed(L, interval(L, u, v)));
    }
}

TEST_CASE("is_rc_closed agrees with the literal triple definition on every subset") {
    for (const auto& L : small_lattices()) {
        if (L.size() > 10)
            continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L.size()); ++mask) {
            ElementSet s(L.size());
            for (ElementId x = 0; x < L.size(); ++x)
                if (mask >> x & 1)
                    s.insert(x);
            CHECK(is_rc_closed(L, s) == oracle::rc_closed_literal(L, mask));
        }
    }
}

TEST_CASE("rc_closure examples") {
    auto b2 = boolean(2);
    CHECK(rc_closure(b2, ElementSet(4, {0, 1, 3})) == ElementSet::full(4));
    CHECK(rc_closure(b2, ElementSet(4)).empty());

    auto b3 = boolean(3);
    auto iv = interval(b3, 1, 7);
    CHECK(rc_closure(b3, iv) == iv);

    // A maximal chain of B_3 has full length and so generates everything.
    CHECK(rc_closure(b3, ElementSet(8, {0, 1, 3, 7})) == ElementSet::full(8));
    auto fano = fano_subspace_lattice();
    CHECK(rc_closure(fano, ElementSet(16, {0, 1, 8, 15})) == ElementSet::full(16));
}

TEST_CASE("closure axioms on random subsets") {
    std::mt19937_64 rng(7);
    for (const auto& L : small_lattices()) {
        for (int s = 0; s < 30; ++s) {
            ElementSet X(L.size()), Y(L.size());
            for (ElementId x = 0; x < L.size(); ++x) {
                if (rng() % 3 == 0)
                    X.insert(x);
                if (rng() % 3 == 0)
                    Y.insert(x);
            }
            Y |= X;
            auto cx = rc_closure(L, X);
            CHECK(X.is_subset_of(cx));
            CHECK(cx.is_subset_of(rc_closure(L, Y)));
            CHECK(rc_closure(L, cx) == cx);
            CHECK(is_rc_closed(L, cx));
        }
    }
}

TEST_CASE("closure is the least RC-closed superset") {
    for (const auto& L : {boolean(2), m_diamond(3), n5(), chain(3)}) {
        auto closed = oracle::rcsub_by_subsets(L);
        for (std::uint64_t xmask = 0; xmask < (std::uint64_t{1} << L.size()); ++xmask) {
            std::uint64_t least = ~std::uint64_t{0};
            for (auto c : closed)
                if ((xmask & ~c) == 0 && __builtin_popcountll(c) < __builtin_popcountll(least))
                    least = c;
            ElementSet X(L.size());
            for (ElementId x = 0; x < L.size(); ++x)
                if (xmask >> x & 1)
                    X.insert(x);
            CHECK(oracle::to_mask(rc_closure(L, X)) == least);
        }
    }
}

TEST_CASE("enumerate_rcsub small cases") {
    auto b1 = enumerate_rcsub(chain(1));
    CHECK(b1.size() == 4);
    CHECK(b1.at(b1.empty_index()).empty());
    CHECK(b1.at(b1.full_index()) == ElementSet::full(2));

    for (int k = 0; k <= 4; ++k)
        CHECK(enumerate_rcsub(chain(k)).size() == (std::size_t{1} << (k + 1)));

    // Values from the brute-force subset filter (also recomputed below).
    CHECK(enumerate_rcsub(boolean(2)).size() == 11);
    CHECK(enumerate_rcsub(boolean(3)).size() == 38);
    CHECK(enumerate_rcsub(m_diamond(3)).size() == 14);
}

TEST_CASE("enumeration matches the brute-force subset filter") {
    for (const auto& L : small_lattices()) {
        CAPTURE(L.size());
        auto family = enumerate_rcsub(L);
        CHECK(family_masks(family) == oracle::rcsub_by_subsets(L));
    }
}

TEST_CASE("family invariants") {
    for (const auto& L : small_lattices()) {
        auto family = enumerate_rcsub(L);
        const auto& sets = family.closed_sets();
        for (const auto& s : sets)
            CHECK(is_rc_closed(L, s));
        for (const auto& a : sets)
            for (const auto& b : sets)
                CHECK(family.index_of(a & b).has_value());

        // Covers are exactly the inclusion pairs with nothing in between.
        std::vector<std::pair<FamilyIndex, FamilyIndex>> literal;
        for (FamilyIndex u = 0; u < family.size(); ++u)
            for (FamilyIndex v = 0; v < family.size(); ++v)
                if (covers_in_rcsub(family, u, v))
                    literal.emplace_back(u, v);
        auto covers = family.inclusion_covers();
        std::sort(covers.begin(), covers.end());
        CHECK(covers == literal);

        // Lengths strictly increase along every cover.
        for (auto [u, v] : family.inclusion_covers())
            CHECK(family.lengths()[u] < family.lengths()[v]);
    }
}

TEST_CASE("enumeration is in lectic order") {
    auto family = enumerate_rcsub(boolean(3));
    // In lectic order the smallest element of the symmetric difference belongs
    // to the later set.
    const auto& sets = family.closed_sets();
    for (std::size_t i = 1; i < sets.size(); ++i) {
        auto diff = (sets[i - 1] - sets[i]) | (sets[i] - sets[i - 1]);
        auto members = diff.members();
        REQUIRE_FALSE(members.empty());
        CHECK(sets[i].contains(members.front()));
    }
}

TEST_CASE("enumeration budget") {
    EnumerationBudget tight;
    tight.max_elements = 7;
    CHECK_THROWS_AS(enumerate_rcsub(boolean(3), tight), Overbudget);
    EnumerationBudget few;
    few.max_closed_sets = 5;
    CHECK_THROWS_AS(enumerate_rcsub(boolean(2), few), Overbudget);
}

TEST_CASE("rcsub_length") {
    CHECK(rcsub_length(enumerate_rcsub(boolean(3))) == 4);
    CHECK(rcsub_length(enumerate_rcsub(chain(0))) == 1);
    CHECK(rcsub_length(enumerate_rcsub(n5())) == 4);
}

TEST_CASE("rcsub_is_ranked") {
    CHECK(rcsub_is_ranked(enumerate_rcsub(chain(1))));
    CHECK(rcsub_is_ranked(enumerate_rcsub(boolean(3))));
    CHECK(rcsub_is_ranked(enumerate_rcsub(product(chain(2), chain(2)))));
    CHECK_FALSE(rcsub_is_ranked(enumerate_rcsub(fano_subspace_lattice())));
}

TEST_CASE("covers_in_rcsub") {
    auto b2 = boolean(2);
    auto family = enumerate_rcsub(b2);
    auto idx = [&](ElementSet s) { return *family.index_of(s); };
    for (ElementId x = 0; x < 4; ++x)
        CHECK(covers_in_rcsub(family, family.empty_index(), idx(ElementSet(4, {x}))));
    CHECK_FALSE(covers_in_rcsub(family, idx(ElementSet(4, {0})), family.full_index()));
    CHECK(covers_in_rcsub(family, idx(ElementSet(4, {0})), idx(ElementSet(4, {0, 3}))));
    CHECK_FALSE(covers_in_rcsub(family, family.full_index(), family.empty_index()));
}

TEST_CASE("covers in a distributive family are the one-step length increases") {
    for (const auto& L : {boolean(3), chain(3), product(chain(2), chain(1))}) {
        auto family = enumerate_rcsub(L);
        for (FamilyIndex u = 0; u < family.size(); ++u)
            for (FamilyIndex v = 0; v < family.size(); ++v) {
                if (!family.at(u).is_proper_subset_of(family.at(v)))
                    continue;
                CHECK(covers_in_rcsub(family, u, v) == (family.lengths()[v] == family.lengths()[u] + 1));
            }
    }
}

TEST_CASE("extreme maximal chains of RCSub(fano)") {
    auto family = enumerate_rcsub(fano_subspace_lattice());
    auto shortest = shortest_maximal_chain(family);
    auto longest = longest_maximal_chain(family);
    CHECK(shortest.size() - 1 == 3);
    CHECK(longest.size() - 1 == 4);
    for (std::size_t i = 1; i < longest.size(); ++i)
        CHECK(covers_in_rcsub(family, longest[i - 1], longest[i]));
    for (std::size_t i = 1; i < shortest.size(); ++i)
        CHECK(covers_in_rcsub(family, shortest[i - 1], shortest[i]));
}

TEST_CASE("family_lattice") {
    auto family = enumerate_rcsub(chain(1));
    auto order = family_lattice(family);
    CHECK(order.size() == 4);
    CHECK(order.bottom() == family.empty_index());
    CHECK(order.top() == family.full_index());
    CHECK(is_boolean(order));
}
