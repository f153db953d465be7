#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcsub/lattice.hpp"

namespace rcsub {

// Outcome of an exhaustive identity scan. When the identity fails,
// `counterexample` holds the first violating tuple in scan order; the meaning
// of its coordinates is given per check below.
struct IdentityCheck {
    bool holds = true;
    std::vector<ElementId> counterexample;

    explicit operator bool() const { return holds; }
};

// Upper bound on the number of tuples an identity scan may visit.
inline constexpr std::uint64_t kDefaultTupleBudget = 200'000'000;

// Counterexample (x, y, z) with x <= z and x v (y ^ z) != (x v y) ^ z.
IdentityCheck check_modular(const Lattice& L);

// Huhn's n-distributive law over all x and all (n+1)-tuples y_0..y_n:
//   x ^ (y_0 v ... v y_n) = V_j (x ^ V_{i != j} y_i).
// Counterexample is (x, y_0, ..., y_n). Throws Overbudget when |L|^(n+2)
// exceeds `budget`, and std::invalid_argument for n < 1.
IdentityCheck check_n_distributive(const Lattice& L, int n, std::uint64_t budget = kDefaultTupleBudget);

// Counterexample (a, b): a ^ b is covered by a but b is not covered by a v b
// (for the lower form: b is covered by a v b but a ^ b is not covered by a).
IdentityCheck check_semimodular(const Lattice& L);
IdentityCheck check_lower_semimodular(const Lattice& L);

// Counterexample (x): an element whose principal ideal has maximal chains of
// different lengths.
IdentityCheck check_ranked(const Lattice& L);

// Counterexample (x): an element without a complement.
IdentityCheck check_complemented(const Lattice& L);

bool is_modular(const Lattice& L);
bool is_n_distributive(const Lattice& L, int n, std::uint64_t budget = kDefaultTupleBudget);
bool is_distributive(const Lattice& L);
bool is_semimodular(const Lattice& L);
bool is_lower_semimodular(const Lattice& L);
bool is_ranked(const Lattice& L);
bool is_complemented(const Lattice& L);
bool is_boolean(const Lattice& L);

} // namespace rcsub
