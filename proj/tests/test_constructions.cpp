#include <doctest.h>

#include <algorithm>

#include "rcsub/constructions.hpp"
#include "rcsub/predicates.hpp"
#include "rcsub/rc_closure.hpp"

using namespace rcsub;

namespace {

std::size_t atom_count(const Lattice& L) { return L.upper_covers(L.bottom()).size(); }
std::size_t coatom_count(const Lattice& L) { return L.lower_covers(L.top()).size(); }

} // namespace

TEST_CASE("standard generators") {
    auto c3 = chain(3);
    CHECK(c3.size() == 4);
    CHECK(length(c3) == 3);

    auto b3 = boolean(3);
    CHECK(b3.size() == 8);
    CHECK(atom_count(b3) == 3);
    CHECK(length(b3) == 3);

    auto sq = product(chain(1), chain(1));
    CHECK(sq.size() == 4);
    CHECK(length(sq) == 2);
    CHECK(is_boolean(sq));

    auto m4 = m_diamond(4);
    CHECK(m4.size() == 6);
    CHECK(atom_count(m4) == 4);

    CHECK_THROWS_AS(boolean(kMaxBooleanOrder + 1), Overbudget);
    CHECK_THROWS_AS(chain(-1), std::invalid_argument);
}

TEST_CASE("Fano subspace lattice") {
    auto fano = fano_subspace_lattice();
    CHECK(fano.size() == 16);
    CHECK(length(fano) == 3);
    CHECK(atom_count(fano) == 7);
    CHECK(coatom_count(fano) == 7);
    CHECK(is_modular(fano));

    // Two distinct points join to their unique common line.
    for (ElementId p = 1; p <= 7; ++p)
        for (ElementId q = p + 1; q <= 7; ++q) {
            ElementId line = fano.join(p, q);
            REQUIRE(line >= 8);
            REQUIRE(line <= 14);
            const auto& pts = fano_lines()[line - 8];
            CHECK(std::count(pts.begin(), pts.end(), static_cast<int>(p)) == 1);
            CHECK(std::count(pts.begin(), pts.end(), static_cast<int>(q)) == 1);
        }

    // Leaving out any one point, the rest still span the plane; dually for lines.
    for (ElementId skip = 1; skip <= 7; ++skip) {
        std::vector<ElementId> rest;
        for (ElementId p = 1; p <= 7; ++p)
            if (p != skip)
                rest.push_back(p);
        CHECK(fano.join_all(rest) == fano.top());
    }
    for (ElementId skip = 8; skip <= 14; ++skip) {
        std::vector<ElementId> rest;
        for (ElementId l = 8; l <= 14; ++l)
            if (l != skip)
                rest.push_back(l);
        CHECK(fano.meet_all(rest) == fano.bottom());
    }
}

TEST_CASE("downset lattices") {
    auto antichain3 = Poset::from_relations(3, {});
    auto d = downset_lattice(antichain3);
    CHECK(d.size() == 8);
    CHECK(is_boolean(d));

    auto chain_poset = Poset::from_relations(3, {{0, 1}, {1, 2}});
    auto dc = downset_lattice(chain_poset);
    CHECK(dc.size() == 4);
    CHECK(length(dc) == 3);

    // 2+2: two disjoint 2-chains give the 3x3 grid.
    auto two_plus_two = Poset::from_relations(4, {{0, 1}, {2, 3}});
    auto grid = downset_lattice(two_plus_two);
    CHECK(grid.size() == 9);
    CHECK(is_distributive(grid));
    CHECK(length(grid) == 4);

    CHECK(downset_lattice(Poset::from_relations(0, {})).size() == 1);
}

TEST_CASE("all_posets counts") {
    CHECK(all_posets(0).size() == 1);
    CHECK(all_posets(1).size() == 1);
    CHECK(all_posets(2).size() == 3);

    // Oracle: filter every 3x3 boolean matrix for the partial order axioms.
    std::size_t expected3 = 0;
    for (unsigned m = 0; m < (1u << 9); ++m) {
        auto r = [&](int a, int b) { return (m >> (a * 3 + b)) & 1u; };
        bool ok = true;
        for (int a = 0; a < 3; ++a) {
            ok = ok && r(a, a);
            for (int b = 0; b < 3; ++b) {
                ok = ok && !(a != b && r(a, b) && r(b, a));
                for (int c = 0; c < 3; ++c)
                    ok = ok && !(r(a, b) && r(b, c) && !r(a, c));
            }
        }
        expected3 += ok;
    }
    CHECK(all_posets(3).size() == expected3);
    CHECK(all_posets(4).size() == 219);
    CHECK_THROWS_AS(all_posets(5), Overbudget);
}

TEST_CASE("random_poset is deterministic per seed") {
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        CAPTURE(seed);
        auto a = random_poset(7, seed);
        auto b = random_poset(7, seed);
        CHECK(a == b);
        CHECK(is_distributive(downset_lattice(a)));
    }
    CHECK_THROWS_AS(random_poset(9, 1), Overbudget);
}

TEST_CASE("Poset validation") {
    CHECK_THROWS_AS(Poset::from_relations(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Poset(2, {true, false, false, false}), std::invalid_argument);
}

TEST_CASE("join irreducibles") {
    CHECK(join_irreducibles(boolean(3)) == ElementSet(8, {1, 2, 4}));
    CHECK(join_irreducibles(chain(3)) == ElementSet(4, {1, 2, 3}));
    auto grid = downset_lattice(Poset::from_relations(4, {{0, 1}, {2, 3}}));
    CHECK(join_irreducibles(grid).size() == 4);
}

TEST_CASE("Birkhoff embedding") {
    auto e = birkhoff_embed(boolean(3));
    CHECK(e.target.size() == 8);
    CHECK(is_lattice_embedding(e));
    for (ElementId x = 0; x < 8; ++x)
        CHECK(e.map[x] == x);

    auto ec = birkhoff_embed(chain(3));
    CHECK(ec.target.size() == 8);
    CHECK(is_lattice_embedding(ec));
    std::vector<ElementId> expected{0, 1, 3, 7};
    CHECK(ec.map == expected);

    auto grid = downset_lattice(Poset::from_relations(4, {{0, 1}, {2, 3}}));
    auto eg = birkhoff_embed(grid);
    CHECK(eg.target.size() == 16);
    CHECK(is_lattice_embedding(eg));

    CHECK_THROWS_AS(birkhoff_embed(m_diamond(3)), NotDistributive);
}

TEST_CASE("chain decomposition of the full chain of chain(3)") {
    auto d = chain_decomposition(chain(3), {0, 1, 2, 3});
    std::vector<ElementId> atoms{1, 2, 4};
    CHECK(d.parts == atoms);
}

TEST_CASE("chain decomposition with k = 0 gives b_1 = c_1") {
    auto L = boolean(3);
    auto d = chain_decomposition(L, {1, 7});
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0] == d.chain[1]);
}

TEST_CASE("chain decomposition satisfies the join and meet clauses") {
    auto grid = downset_lattice(Poset::from_relations(4, {{0, 1}, {2, 3}}));
    // A longest chain of the grid, built greedily through upper covers.
    std::vector<ElementId> c{grid.bottom()};
    while (c.back() != grid.top())
        c.push_back(grid.upper_covers(c.back()).front());
    auto d = chain_decomposition(grid, c);
    const Lattice& D = d.embedding.target;
    const ElementId c0 = d.chain[0];
    for (std::size_t i = 2; i < d.chain.size(); ++i) {
        std::vector<ElementId> first(d.parts.begin(), d.parts.begin() + static_cast<long>(i - 1));
        for (std::size_t t = 0; t < i; ++t)
            CHECK(d.parts[t] != c0);
        CHECK(D.join_all(first) == d.chain[i - 1]);
        CHECK(D.meet(D.join_all(first), d.parts[i - 1]) == c0);
    }
    std::vector<ElementId> gens = d.parts;
    gens.push_back(c0);
    CHECK(sublattice_closure(D, ElementSet(D.size(), gens)).size() == (std::size_t{1} << d.parts.size()));
}

TEST_CASE("chain decomposition errors") {
    CHECK_THROWS_AS(chain_decomposition(boolean(2), {0, 3, 1}), NotAChain);
    CHECK_THROWS_AS(chain_decomposition(boolean(2), {1, 2}), NotAChain);
    CHECK_THROWS_AS(chain_decomposition(boolean(2), {0}), NotAChain);
    CHECK_THROWS_AS(chain_decomposition(m_diamond(3), {0, 1}), NotDistributive);
}
