#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rcsub/lattice.hpp"

namespace rcsub {

// {y : x ^ y = u and x v y = v}
ElementSet relative_complements(const Lattice& L, ElementId u, ElementId x, ElementId v);

// S is a sublattice and contains every relative complement
// relative_complements(u, x, v) for u, x, v in S. The empty set qualifies.
bool is_rc_closed(const Lattice& L, const ElementSet& S);

// The least RC-closed sublattice containing X; the empty set maps to itself.
ElementSet rc_closure(const Lattice& L, const ElementSet& X);

struct EnumerationBudget {
    std::size_t max_elements = 22;
    std::size_t max_closed_sets = 1'000'000;
};

using FamilyIndex = std::size_t;

/// All RC-closed sublattices of a lattice plus the empty set, ordered by
/// inclusion. Members are kept in lectic order, so the empty set comes first
/// and the whole lattice last.
class ClosureFamily {
public:
    /// Builds a family from an explicit list of closed sets, which must include
    /// the empty set and the whole lattice. Upper covers are computed as the
    /// minimal sets among rc_closure(U + e), which is only correct when the
    /// sets are exactly the closed sets of rc_closure.
    static ClosureFamily from_closed_sets(const Lattice& L, std::vector<ElementSet> sets);

    std::size_t size() const { return closed_sets_.size(); }
    std::size_t universe() const { return universe_; }

    const std::vector<ElementSet>& closed_sets() const { return closed_sets_; }
    const ElementSet& at(FamilyIndex i) const { return closed_sets_.at(i); }

    // (lower, upper) index pairs of the inclusion cover relation.
    const std::vector<std::pair<FamilyIndex, FamilyIndex>>& inclusion_covers() const { return covers_; }
    const std::vector<FamilyIndex>& upper_covers(FamilyIndex i) const { return upper_.at(i); }
    const std::vector<FamilyIndex>& lower_covers(FamilyIndex i) const { return lower_.at(i); }

    // Sublattice length of each member; -1 for the empty set.
    const std::vector<int>& lengths() const { return lengths_; }

    std::optional<FamilyIndex> index_of(const ElementSet& s) const;
    FamilyIndex empty_index() const { return empty_; }
    FamilyIndex full_index() const { return full_; }

private:
    std::size_t universe_ = 0;
    std::vector<ElementSet> closed_sets_;
    std::vector<std::pair<FamilyIndex, FamilyIndex>> covers_;
    std::vector<std::vector<FamilyIndex>> upper_;
    std::vector<std::vector<FamilyIndex>> lower_;
    std::vector<int> lengths_;
    std::unordered_map<ElementSet, FamilyIndex> index_;
    FamilyIndex empty_ = 0;
    FamilyIndex full_ = 0;
};

/// Enumerates RCSub(L) with Ganter's NextClosure: each closed set is produced
/// exactly once, in lectic order. Throws Overbudget when |L| or the number of
/// closed sets exceeds the budget.
ClosureFamily enumerate_rcsub(const Lattice& L, const EnumerationBudget& budget = {});

// Length of the longest chain of the family under inclusion.
std::size_t rcsub_length(const ClosureFamily& family);

// Every member's principal ideal has maximal chains of a single length.
bool rcsub_is_ranked(const ClosureFamily& family);

// U is a proper subset of V with no member strictly between them.
bool covers_in_rcsub(const ClosureFamily& family, FamilyIndex U, FamilyIndex V);

// Cover paths from the empty set to the whole lattice of minimal and maximal
// length. Both are maximal chains of the family.
std::vector<FamilyIndex> shortest_maximal_chain(const ClosureFamily& family);
std::vector<FamilyIndex> longest_maximal_chain(const ClosureFamily& family);

// The family as a Lattice whose element i is closed_sets()[i].
Lattice family_lattice(const ClosureFamily& family);

} // namespace rcsub
