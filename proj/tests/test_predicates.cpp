#include <doctest.h>

#include "rcsub/constructions.hpp"
#include "rcsub/predicates.hpp"

using namespace rcsub;

namespace {

std::vector<Lattice> predicate_zoo() {
    std::vector<Lattice> zoo{chain(0),     chain(1),     chain(3), boolean(2), boolean(3),
                             m_diamond(3), m_diamond(4), n5(),     fano_subspace_lattice(),
                             product(chain(2), chain(1)), product(n5(), chain(1))};
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& P : all_posets(n))
            zoo.push_back(downset_lattice(P));
    return zoo;
}

} // namespace

TEST_CASE("modularity") {
    CHECK(is_modular(boolean(3)));
    CHECK(is_modular(m_diamond(3)));
    CHECK(is_modular(fano_subspace_lattice()));
    auto c = check_modular(n5());
    REQUIRE_FALSE(c.holds);
    REQUIRE(c.counterexample.size() == 3);
    // Pentagon ids: 0 bottom, 1 = a, 2 = b < 3 = c, 4 top. b <= c, b v (a ^ c) = b != c = (b v a) ^ c.
    auto L = n5();
    auto x = c.counterexample[0], y = c.counterexample[1], z = c.counterexample[2];
    CHECK(L.leq(x, z));
    CHECK(L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z));
}

TEST_CASE("n-distributivity") {
    CHECK(is_n_distributive(boolean(2), 1));
    CHECK_FALSE(is_n_distributive(m_diamond(3), 1));
    CHECK(is_n_distributive(m_diamond(3), 2));
    CHECK_FALSE(is_n_distributive(fano_subspace_lattice(), 2));
    CHECK(is_n_distributive(fano_subspace_lattice(), 3));
    CHECK_THROWS_AS(is_n_distributive(chain(2), 0), std::invalid_argument);
}

TEST_CASE("n-distributivity counterexample is a genuine violation") {
    auto L = fano_subspace_lattice();
    auto c = check_n_distributive(L, 2);
    REQUIRE_FALSE(c.holds);
    REQUIRE(c.counterexample.size() == 4);
    ElementId x = c.counterexample[0];
    std::vector<ElementId> y(c.counterexample.begin() + 1, c.counterexample.end());
    ElementId lhs = L.meet(x, L.join_all(y));
    ElementId rhs = L.bottom();
    for (std::size_t j = 0; j < y.size(); ++j) {
        std::vector<ElementId> rest;
        for (std::size_t i = 0; i < y.size(); ++i)
            if (i != j)
                rest.push_back(y[i]);
        rhs = L.join(rhs, L.meet(x, L.join_all(rest)));
    }
    CHECK(lhs != rhs);
}

TEST_CASE("n-distributivity scan reports the budget distinctly") {
    CHECK_THROWS_AS(check_n_distributive(fano_subspace_lattice(), 2, 100), Overbudget);
}

TEST_CASE("distributivity") {
    CHECK(is_distributive(chain(4)));
    CHECK_FALSE(is_distributive(m_diamond(3)));
    CHECK_FALSE(is_distributive(n5()));
    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& P : all_posets(n))
            CHECK(is_distributive(downset_lattice(P)));
}

TEST_CASE("semimodularity") {
    CHECK(is_semimodular(boolean(3)));
    CHECK(is_lower_semimodular(boolean(3)));
    CHECK(is_semimodular(m_diamond(3)));
    CHECK(is_lower_semimodular(m_diamond(3)));
    CHECK_FALSE(is_semimodular(n5()));
    CHECK_FALSE(is_lower_semimodular(n5()));
}

TEST_CASE("rankedness") {
    CHECK(is_ranked(boolean(4)));
    CHECK(is_ranked(chain(5)));
    auto c = check_ranked(n5());
    REQUIRE_FALSE(c.holds);
    CHECK(c.counterexample == std::vector<ElementId>{4});
}

TEST_CASE("complemented and Boolean") {
    CHECK(is_boolean(boolean(3)));
    CHECK(is_boolean(chain(1)));
    CHECK(is_boolean(chain(0)));
    CHECK_FALSE(is_complemented(chain(3)));
    CHECK(is_complemented(m_diamond(3)));
    CHECK_FALSE(is_boolean(m_diamond(3)));
    CHECK(is_complemented(fano_subspace_lattice()));
    CHECK_FALSE(is_boolean(fano_subspace_lattice()));
}

TEST_CASE("predicate implications hold across the zoo") {
    for (const auto& L : predicate_zoo()) {
        CAPTURE(L.size());
        const bool d1 = is_n_distributive(L, 1);
        const bool d2 = is_n_distributive(L, 2);
        if (d1)
            CHECK(d2);
        if (L.size() <= 16 && d2)
            CHECK(is_n_distributive(L, 3));
        if (d1)
            CHECK(is_modular(L));
        if (is_modular(L)) {
            CHECK(is_semimodular(L));
            CHECK(is_lower_semimodular(L));
        }
        if (is_boolean(L))
            CHECK(L.size() == (std::size_t{1} << length(L)));
    }
}
