#include "rcsub/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "rcsub/predicates.hpp"
#include "rcsub/rc_closure.hpp"

namespace rcsub {

Poset::Poset(std::size_t n, std::vector<bool> leq) : n_(n), leq_(std::move(leq)) {
    if (leq_.size() != n * n)
        throw std::invalid_argument("poset relation must have n*n entries");
    for (std::size_t a = 0; a < n; ++a) {
        if (!this->leq(a, a))
            throw std::invalid_argument("poset relation is not reflexive at " + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && this->leq(a, b) && this->leq(b, a))
                throw std::invalid_argument("poset relation is not antisymmetric at (" + std::to_string(a) + ", " +
                                            std::to_string(b) + ")");
            for (std::size_t c = 0; c < n; ++c)
                if (this->leq(a, b) && this->leq(b, c) && !this->leq(a, c))
                    throw std::invalid_argument("poset relation is not transitive");
        }
    }
}

Poset Poset::from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less) {
    std::vector<bool> leq(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        leq[a * n + a] = true;
    for (auto [a, b] : less) {
        if (a >= n || b >= n)
            throw std::out_of_range("poset relation references an element outside 0.." + std::to_string(n - 1));
        leq[a * n + b] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            if (leq[a * n + k])
                for (std::size_t b = 0; b < n; ++b)
                    if (leq[k * n + b])
                        leq[a * n + b] = true;
    return Poset(n, std::move(leq));
}

bool is_lattice_embedding(const Embedding& e) {
    const std::size_t n = e.source.size();
    if (e.map.size() != n)
        return false;
    for (ElementId x : e.map)
        if (x >= e.target.size())
            return false;
    for (ElementId a = 0; a < n; ++a) {
        for (ElementId b = 0; b < n; ++b) {
            if (a != b && e.map[a] == e.map[b])
                return false;
            if (e.map[e.source.meet(a, b)] != e.target.meet(e.map[a], e.map[b]))
                return false;
            if (e.map[e.source.join(a, b)] != e.target.join(e.map[a], e.map[b]))
                return false;
        }
    }
    return true;
}

Lattice chain(int k) {
    if (k < 0)
        throw std::invalid_argument("chain length must be non-negative");
    if (static_cast<std::size_t>(k) + 1 > kMaxLatticeElements)
        throw Overbudget("chain(" + std::to_string(k) + ") exceeds the lattice size limit");
    std::vector<CoverPair> covers;
    for (ElementId i = 0; i < static_cast<ElementId>(k); ++i)
        covers.emplace_back(i, i + 1);
    return Lattice::from_covers(static_cast<std::size_t>(k) + 1, covers);
}

Lattice boolean(int k) {
    if (k < 0)
        throw std::invalid_argument("boolean order must be non-negative");
    if (k > kMaxBooleanOrder)
        throw Overbudget("boolean(" + std::to_string(k) + ") has 2^" + std::to_string(k) +
                         " elements; the limit is k <= " + std::to_string(kMaxBooleanOrder));
    const ElementId n = ElementId{1} << k;
    std::vector<CoverPair> covers;
    for (ElementId s = 0; s < n; ++s)
        for (int t = 0; t < k; ++t)
            if (!(s & (ElementId{1} << t)))
                covers.emplace_back(s, s | (ElementId{1} << t));
    return Lattice::from_covers(n, covers);
}

Lattice m_diamond(int k) {
    if (k < 0)
        throw std::invalid_argument("diamond width must be non-negative");
    if (static_cast<std::size_t>(k) + 2 > kMaxLatticeElements)
        throw Overbudget("m_diamond(" + std::to_string(k) + ") exceeds the lattice size limit");
    const ElementId top = static_cast<ElementId>(k) + 1;
    std::vector<CoverPair> covers;
    if (k == 0)
        covers.emplace_back(0, 1);
    for (ElementId i = 1; i <= static_cast<ElementId>(k); ++i) {
        covers.emplace_back(0, i);
        covers.emplace_back(i, top);
    }
    return Lattice::from_covers(static_cast<std::size_t>(k) + 2, covers);
}

Lattice n5() { return Lattice::from_covers(5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}}); }

Lattice product(const Lattice& first, const Lattice& second) {
    const std::size_t n1 = first.size(), n2 = second.size();
    if (n1 * n2 > kMaxLatticeElements)
        throw Overbudget("product of " + std::to_string(n1) + " and " + std::to_string(n2) +
                         " elements exceeds the lattice size limit");
    auto id = [n2](ElementId i, ElementId j) { return static_cast<ElementId>(i * n2 + j); };
    std::vector<CoverPair> covers;
    for (auto [lo, hi] : first.covers())
        for (ElementId j = 0; j < n2; ++j)
            covers.emplace_back(id(lo, j), id(hi, j));
    for (auto [lo, hi] : second.covers())
        for (ElementId i = 0; i < n1; ++i)
            covers.emplace_back(id(i, lo), id(i, hi));
    return Lattice::from_covers(n1 * n2, covers);
}

const std::vector<std::vector<int>>& fano_lines() {
    static const std::vector<std::vector<int>> lines{{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
                                                     {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    return lines;
}

Lattice fano_subspace_lattice() {
    constexpr ElementId top = 15;
    std::vector<CoverPair> covers;
    for (ElementId p = 1; p <= kFanoPointCount; ++p)
        covers.emplace_back(0, p);
    const auto& lines = fano_lines();
    for (std::size_t l = 0; l < lines.size(); ++l) {
        const ElementId line = static_cast<ElementId>(8 + l);
        for (int p : lines[l])
            covers.emplace_back(static_cast<ElementId>(p), line);
        covers.emplace_back(line, top);
    }
    return Lattice::from_covers(16, covers);
}

Lattice downset_lattice(const Poset& P) {
    const std::size_t n = P.size();
    if (n > 64)
        throw Overbudget("downset enumeration supports at most 64 poset elements");

    std::vector<std::uint64_t> strictly_below(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && P.leq(b, a))
                strictly_below[a] |= std::uint64_t{1} << b;

    // Elements with fewer predecessors first: a linear extension.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return __builtin_popcountll(strictly_below[a]) < __builtin_popcountll(strictly_below[b]);
    });

    std::vector<std::uint64_t> downsets;
    auto extend = [&](auto&& self, std::size_t pos, std::uint64_t current) -> void {
        if (pos == n) {
            if (downsets.size() >= kMaxLatticeElements)
                throw Overbudget("poset has more than " + std::to_string(kMaxLatticeElements) + " downsets");
            downsets.push_back(current);
            return;
        }
        const std::size_t e = order[pos];
        self(self, pos + 1, current);
        if ((strictly_below[e] & ~current) == 0)
            self(self, pos + 1, current | (std::uint64_t{1} << e));
    };
    extend(extend, 0, 0);

    std::sort(downsets.begin(), downsets.end(), [](std::uint64_t a, std::uint64_t b) {
        const int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::unordered_map<std::uint64_t, ElementId> id;
    for (std::size_t i = 0; i < downsets.size(); ++i)
        id.emplace(downsets[i], static_cast<ElementId>(i));

    std::vector<CoverPair> covers;
    for (std::size_t i = 0; i < downsets.size(); ++i) {
        const std::uint64_t d = downsets[i];
        for (std::size_t e = 0; e < n; ++e) {
            const std::uint64_t bit = std::uint64_t{1} << e;
            if (!(d & bit) && (strictly_below[e] & ~d) == 0)
                covers.emplace_back(static_cast<ElementId>(i), id.at(d | bit));
        }
    }
    return Lattice::from_covers(downsets.size(), covers);
}

std::vector<Poset> all_posets(std::size_t n) {
    if (n > 4)
        throw Overbudget("labeled poset enumeration is limited to n <= 4");
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b)
                slots.emplace_back(a, b);

    std::vector<Poset> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
        std::vector<bool> leq(n * n, false);
        for (std::size_t a = 0; a < n; ++a)
            leq[a * n + a] = true;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask & (std::uint32_t{1} << s))
                leq[slots[s].first * n + slots[s].second] = true;
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b) {
                if (a != b && leq[a * n + b] && leq[b * n + a])
                    ok = false;
                for (std::size_t c = 0; c < n && ok; ++c)
                    if (leq[a * n + b] && leq[b * n + c] && !leq[a * n + c])
                        ok = false;
            }
        if (ok)
            out.emplace_back(n, std::move(leq));
    }
    return out;
}

Poset random_poset(std::size_t n, std::uint64_t seed) {
    if (n > 8)
        throw Overbudget("random_poset is limited to n <= 8");
    // The raw mt19937_64 output sequence is fixed by the standard; the library
    // distributions are not, so sampling is done by hand.
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng() % i]);

    constexpr std::uint64_t edge_threshold = 7378697629483820646ull;  // 0.4 * 2^64
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() < edge_threshold)
                less.emplace_back(perm[i], perm[j]);
    return Poset::from_relations(n, less);
}

ElementSet join_irreducibles(const Lattice& L) {
    ElementSet out(L.size());
    for (ElementId x = 0; x < L.size(); ++x)
        if (L.lower_covers(x).size() == 1)
            out.insert(x);
    return out;
}

Embedding birkhoff_embed(const Lattice& L) {
    if (!is_distributive(L))
        throw NotDistributive("Birkhoff embedding needs a distributive lattice");
    const auto irreducibles = join_irreducibles(L).members();
    const int k = static_cast<int>(irreducibles.size());
    if (k > kMaxBooleanOrder)
        throw Overbudget("lattice has " + std::to_string(k) + " join-irreducibles; the Boolean target is limited to " +
                         std::to_string(kMaxBooleanOrder));
    Embedding e{L, boolean(k), std::vector<ElementId>(L.size(), 0)};
    for (ElementId a = 0; a < L.size(); ++a)
        for (int t = 0; t < k; ++t)
            if (L.leq(irreducibles[t], a))
                e.map[a] |= ElementId{1} << t;
    return e;
}

ChainDecomposition chain_decomposition(const Lattice& L, const std::vector<ElementId>& chain_ids) {
    if (chain_ids.size() < 2)
        throw NotAChain("chain decomposition needs at least c_0 < c_1");
    for (std::size_t i = 1; i < chain_ids.size(); ++i)
        if (!L.less(chain_ids[i - 1], chain_ids[i]))
            throw NotAChain("elements " + std::to_string(chain_ids[i - 1]) + " and " + std::to_string(chain_ids[i]) +
                            " are not strictly increasing");

    ChainDecomposition out{birkhoff_embed(L), {}, {}};
    const Lattice& D = out.embedding.target;
    for (ElementId c : chain_ids)
        out.chain.push_back(out.embedding.map[c]);
    const ElementId c0 = out.chain.front();
    for (std::size_t i = 1; i < out.chain.size(); ++i) {
        ElementSet rc = relative_complements(D, c0, out.chain[i - 1], out.chain[i]);
        if (rc.size() != 1)
            throw std::logic_error("relative complement in a Boolean lattice is not unique");
        out.parts.push_back(rc.first());
    }
    return out;
}

} // namespace rcsub
