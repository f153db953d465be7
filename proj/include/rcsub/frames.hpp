#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rcsub/lattice.hpp"

namespace rcsub {

/// Candidate von Neumann n-frame (a_i, c_ij), indices 0-based.
///
/// `c` is stored as a full n*n table with an unused diagonal so that a
/// non-symmetric witness can be represented and rejected by verify_frame.
struct FrameWitness {
    int order = 0;
    std::vector<ElementId> a;
    std::vector<ElementId> c;
    ElementId zero_f = 0;
    ElementId one_f = 0;

    ElementId c_at(int i, int j) const { return c.at(static_cast<std::size_t>(i * order + j)); }
    void set_c(int i, int j, ElementId value) { c.at(static_cast<std::size_t>(i * order + j)) = value; }

    // Fills zero_f and one_f from the a_i; `c` is sized but left at 0.
    static FrameWitness with_axes(const Lattice& L, std::vector<ElementId> axes);
};

// Checks every normalized frame axiom by direct evaluation:
//   zero_f = meet of the a_i, one_f = join of the a_i, zero_f != one_f,
//   a_j ^ V_{t != j} a_t = zero_f, a_i ^ c_ij = zero_f, c_ij = c_ji,
//   a_i v c_ij = a_i v a_j, c_ik = (a_i v a_k) ^ (c_ij v c_jk).
bool verify_frame(const Lattice& L, const FrameWitness& w);

inline constexpr std::uint64_t kDefaultFrameBudget = 50'000'000;

/// Exhaustive search for a von Neumann frame of the given order (>= 2).
///
/// Axis tuples are visited in increasing id order. For each independent tuple
/// the c_{0,j} range over the common complements of a_0 and a_j in
/// [zero_f, a_0 v a_j]; every other c_jk is then forced by
/// c_jk = (a_j v a_k) ^ (c_j0 v c_0k). Throws Overbudget when the number of
/// axis tuples exceeds `budget`.
std::optional<FrameWitness> find_frame(const Lattice& L, int order, std::uint64_t budget = kDefaultFrameBudget);

} // namespace rcsub
