#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rcsub/element_set.hpp"
#include "rcsub/errors.hpp"

namespace rcsub {

using CoverPair = std::pair<ElementId, ElementId>;

// Largest element count for which a Lattice (with its n*n meet and join
// tables) may be constructed.
inline constexpr std::size_t kMaxLatticeElements = 4096;

/// A finite lattice on the dense element ids 0..n-1.
///
/// The order, the meet and join tables and the cover relation are computed
/// once at construction and never change, so a Lattice can be shared freely
/// between threads. Bottom and top are whatever elements the order makes them;
/// they need not be 0 and n-1.
class Lattice {
public:
    /// Builds the lattice whose order is the reflexive-transitive closure of
    /// `cover_pairs` (lower, upper). Redundant or duplicated pairs are
    /// accepted; covers() always returns the transitive reduction.
    ///
    /// Throws CycleDetected or NotALattice naming an offending pair,
    /// std::out_of_range for ids >= n, and Overbudget for n > kMaxLatticeElements.
    static Lattice from_covers(std::size_t n, const std::vector<CoverPair>& cover_pairs);

    std::size_t size() const { return n_; }

    ElementId bottom() const { return bottom_; }
    ElementId top() const { return top_; }

    bool leq(ElementId a, ElementId b) const {
        check(a);
        check(b);
        return up_[a].contains(b);
    }
    bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
    bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }
    // a is covered by b.
    bool covered_by(ElementId a, ElementId b) const {
        check(a);
        check(b);
        return upper_cover_sets_[a].contains(b);
    }

    ElementId meet(ElementId a, ElementId b) const {
        check(a);
        check(b);
        return meet_[a * n_ + b];
    }
    ElementId join(ElementId a, ElementId b) const {
        check(a);
        check(b);
        return join_[a * n_ + b];
    }
    // Meet/join of a set; the empty meet is top and the empty join is bottom.
    ElementId meet_all(const std::vector<ElementId>& xs) const;
    ElementId join_all(const std::vector<ElementId>& xs) const;

    const std::vector<CoverPair>& covers() const { return covers_; }
    const std::vector<ElementId>& upper_covers(ElementId a) const { return upper_covers_[a]; }
    const std::vector<ElementId>& lower_covers(ElementId a) const { return lower_covers_[a]; }

    // Elements in a linear extension of the order (bottom first).
    const std::vector<ElementId>& linear_order() const { return linear_order_; }

    // {x : x <= a} and {x : x >= a}
    const ElementSet& down_set(ElementId a) const { return down_[a]; }
    const ElementSet& up_set(ElementId a) const { return up_[a]; }

private:
    Lattice() = default;
    void check(ElementId a) const;

    std::size_t n_ = 0;
    ElementId bottom_ = 0;
    ElementId top_ = 0;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    std::vector<ElementId> meet_;
    std::vector<ElementId> join_;
    std::vector<CoverPair> covers_;
    std::vector<std::vector<ElementId>> upper_covers_;
    std::vector<std::vector<ElementId>> lower_covers_;
    std::vector<ElementSet> upper_cover_sets_;
    std::vector<ElementId> linear_order_;
};

// Order-theoretic queries. All of them validate ids against the lattice.

std::size_t length(const Lattice& L);
// Throws NotComparable unless u <= v.
std::size_t interval_length(const Lattice& L, ElementId u, ElementId v);

ElementSet interval(const Lattice& L, ElementId u, ElementId v);
ElementSet ideal(const Lattice& L, ElementId a);
ElementSet filter(const Lattice& L, ElementId a);

// The empty set counts as a sublattice.
bool is_sublattice(const Lattice& L, const ElementSet& S);
ElementSet sublattice_closure(const Lattice& L, const ElementSet& X);

// Length of the longest chain inside S; -1 for the empty set.
int subset_length(const Lattice& L, const ElementSet& S);

struct ChainLengths {
    std::size_t shortest;
    std::size_t longest;
    friend bool operator==(const ChainLengths&, const ChainLengths&) = default;
};

// Shortest and longest maximal chains of the principal ideal of x, i.e. paths
// from bottom to x in the cover graph.
ChainLengths maximal_chain_lengths(const Lattice& L, ElementId x);

} // namespace rcsub
