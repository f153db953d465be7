#pragma once

#include <cstdint>
#include <vector>

#include "rcsub/lattice.hpp"

namespace rcsub {

// A finite partial order on 0..n-1.
class Poset {
public:
    // Throws std::invalid_argument unless `leq` (row-major n*n) is reflexive,
    // antisymmetric and transitive.
    Poset(std::size_t n, std::vector<bool> leq);

    // Reflexive-transitive closure of the given strict pairs (a < b). Throws
    // std::invalid_argument if the result is not antisymmetric.
    static Poset from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less);

    std::size_t size() const { return n_; }
    bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b]; }

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    std::size_t n_;
    std::vector<bool> leq_;
};

struct Embedding {
    Lattice source;
    Lattice target;
    std::vector<ElementId> map;
};

// Injective and preserves binary meets and joins (bounds need not be kept).
bool is_lattice_embedding(const Embedding& e);

// Largest k accepted by boolean(k); 2^k must stay within kMaxLatticeElements.
inline constexpr int kMaxBooleanOrder = 12;

// 0 < 1 < ... < k
Lattice chain(int k);
// Subsets of a k-set; element i is the subset with bitmask i.
Lattice boolean(int k);
// Bottom 0, atoms 1..k, top k+1.
Lattice m_diamond(int k);
// Pentagon 0 < a < 1, 0 < b < c < 1 with ids 0=bottom, 1=a, 2=b, 3=c, 4=top.
Lattice n5();
// Element (i, j) has id i * |second| + j.
Lattice product(const Lattice& first, const Lattice& second);

/// Subspace lattice of the Fano plane. Ids: 0 is the empty subspace, 1..7 are
/// the points, 8..14 the lines {1,2,3}, {1,4,5}, {1,6,7}, {2,4,6}, {2,5,7},
/// {3,4,7}, {3,5,6} in that order, and 15 is the whole plane.
Lattice fano_subspace_lattice();

inline constexpr std::size_t kFanoPointCount = 7;
const std::vector<std::vector<int>>& fano_lines();

// Down-closed subsets of P ordered by inclusion; id 0 is the empty downset and
// ids grow with downset size. Throws Overbudget beyond kMaxLatticeElements
// downsets or 64 poset elements.
Lattice downset_lattice(const Poset& P);

// Every partial order on n labeled points, n <= 4, in a fixed order.
std::vector<Poset> all_posets(std::size_t n);

// Transitive closure of a random DAG: a random linear extension with each
// forward pair related with probability 0.4. Deterministic per seed on every
// platform; n <= 8.
Poset random_poset(std::size_t n, std::uint64_t seed);

// Elements with exactly one lower cover.
ElementSet join_irreducibles(const Lattice& L);

// a -> {j in J(L) : j <= a} into the Boolean lattice on J(L), bit t of the
// target id standing for the t-th join-irreducible in id order.
// Throws NotDistributive, or Overbudget if |J(L)| > kMaxBooleanOrder.
Embedding birkhoff_embed(const Lattice& L);

struct ChainDecomposition {
    Embedding embedding;
    std::vector<ElementId> chain;  // c_0 < ... < c_{k+1}, images in the target
    std::vector<ElementId> parts;  // b_1 .. b_{k+1} in the target
};

/// For a chain c_0 < c_1 < ... < c_{k+1} of a distributive lattice L, moves the
/// chain into the Boolean lattice D of the Birkhoff embedding and picks b_i as
/// the unique relative complement of c_{i-1} in [c_0, c_i] within D.
/// Throws NotDistributive, or NotAChain unless the ids are strictly increasing
/// in L and there are at least two of them.
ChainDecomposition chain_decomposition(const Lattice& L, const std::vector<ElementId>& chain);

} // namespace rcsub
