#include "rcsub/lattice.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace rcsub {

namespace {

std::string pair_text(ElementId a, ElementId b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Reports some edge lying on a cycle among the nodes Kahn's algorithm could not
// order.
CoverPair find_cycle_edge(const std::vector<std::vector<ElementId>>& pred, const std::vector<bool>& ordered) {
    std::size_t n = pred.size();
    ElementId start = 0;
    while (ordered[start])
        ++start;
    std::vector<int> seen_at(n, -1);
    ElementId cur = start;
    for (int step = 0;; ++step) {
        seen_at[cur] = step;
        ElementId p = cur;
        for (ElementId q : pred[cur])
            if (!ordered[q]) {
                p = q;
                break;
            }
        if (seen_at[p] >= 0)
            return {p, cur};
        cur = p;
    }
}

struct PathLengths {
    std::size_t shortest;
    std::size_t longest;
};

// Shortest and longest cover paths from u to v; requires u <= v.
PathLengths cover_path_lengths(const Lattice& L, ElementId u, ElementId v) {
    if (!L.leq(u, v))
        throw NotComparable("elements " + pair_text(u, v) + " are not ordered u <= v");
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> lo(L.size(), unset), hi(L.size(), 0);
    lo[u] = 0;
    const ElementSet& above = L.up_set(u);
    const ElementSet& below = L.down_set(v);
    for (ElementId x : L.linear_order()) {
        if (x == u || !above.contains(x) || !below.contains(x))
            continue;
        for (ElementId y : L.lower_covers(x)) {
            if (lo[y] == unset)
                continue;
            lo[x] = std::min(lo[x], lo[y] + 1);
            hi[x] = std::max(hi[x], hi[y] + 1);
        }
    }
    return {lo[v], hi[v]};
}

} // namespace

Lattice Lattice::from_covers(std::size_t n, const std::vector<CoverPair>& cover_pairs) {
    if (n == 0)
        throw NotALattice("a lattice needs at least one element");
    if (n > kMaxLatticeElements)
        throw Overbudget("lattice with " + std::to_string(n) + " elements exceeds the limit of " +
                         std::to_string(kMaxLatticeElements));

    std::vector<std::vector<ElementId>> succ(n), pred(n);
    for (auto [a, b] : cover_pairs) {
        if (a >= n || b >= n)
            throw std::out_of_range("cover pair " + pair_text(a, b) + " references an element outside 0.." +
                                    std::to_string(n - 1));
        if (a == b)
            throw CycleDetected("cover pair " + pair_text(a, b) + " relates an element to itself");
        succ[a].push_back(b);
        pred[b].push_back(a);
    }
    for (auto* adj : {&succ, &pred})
        for (auto& row : *adj) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }

    // Kahn's algorithm, smallest ready id first so the order is deterministic.
    std::vector<std::size_t> indegree(n);
    for (std::size_t i = 0; i < n; ++i)
        indegree[i] = pred[i].size();
    std::vector<ElementId> order;
    order.reserve(n);
    std::vector<ElementId> ready;
    for (ElementId i = 0; i < n; ++i)
        if (indegree[i] == 0)
            ready.push_back(i);
    std::make_heap(ready.begin(), ready.end(), std::greater<>());
    while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>());
        ElementId a = ready.back();
        ready.pop_back();
        order.push_back(a);
        for (ElementId b : succ[a])
            if (--indegree[b] == 0) {
                ready.push_back(b);
                std::push_heap(ready.begin(), ready.end(), std::greater<>());
            }
    }
    if (order.size() != n) {
        std::vector<bool> ordered(n, false);
        for (ElementId a : order)
            ordered[a] = true;
        auto [a, b] = find_cycle_edge(pred, ordered);
        throw CycleDetected("cover relation has a cycle through pair " + pair_text(a, b));
    }

    Lattice L;
    L.n_ = n;
    L.linear_order_ = order;
    L.up_.assign(n, ElementSet(n));
    L.down_.assign(n, ElementSet(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        ElementId a = *it;
        L.up_[a].insert(a);
        for (ElementId b : succ[a])
            L.up_[a] |= L.up_[b];
    }
    for (ElementId a : order) {
        L.down_[a].insert(a);
        for (ElementId b : pred[a])
            L.down_[a] |= L.down_[b];
    }

    // Meets are filled in linear order: if a and b are incomparable, meet(a, b)
    // lies below some lower neighbour a' of a, and then meet(a', b) = meet(a, b).
    // The candidate is verified against the full set of common lower bounds.
    L.meet_.assign(n * n, 0);
    L.join_.assign(n * n, 0);
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i]] = i;

    for (ElementId a : order) {
        for (ElementId b = 0; b < n; ++b) {
            ElementId m;
            if (L.up_[a].contains(b))
                m = a;
            else if (L.up_[b].contains(a))
                m = b;
            else {
                bool found = false;
                m = 0;
                for (ElementId lower : pred[a]) {
                    ElementId cand = L.meet_[lower * n + b];
                    if (!found || position[cand] > position[m])
                        m = cand;
                    found = true;
                }
                ElementSet common = L.down_[a] & L.down_[b];
                if (!found || !common.contains(m) || !common.is_subset_of(L.down_[m]))
                    throw NotALattice("pair " + pair_text(a, b) + " has no greatest lower bound");
            }
            L.meet_[a * n + b] = m;
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        ElementId a = *it;
        for (ElementId b = 0; b < n; ++b) {
            ElementId j;
            if (L.up_[a].contains(b))
                j = b;
            else if (L.up_[b].contains(a))
                j = a;
            else {
                bool found = false;
                j = 0;
                for (ElementId upper : succ[a]) {
                    ElementId cand = L.join_[upper * n + b];
                    if (!found || position[cand] < position[j])
                        j = cand;
                    found = true;
                }
                ElementSet common = L.up_[a] & L.up_[b];
                if (!found || !common.contains(j) || !common.is_subset_of(L.up_[j]))
                    throw NotALattice("pair " + pair_text(a, b) + " has no least upper bound");
            }
            L.join_[a * n + b] = j;
        }
    }

    L.bottom_ = order.front();
    L.top_ = order.back();
    for (ElementId a = 0; a < n; ++a) {
        L.bottom_ = L.meet_[L.bottom_ * n + a];
        L.top_ = L.join_[L.top_ * n + a];
    }

    // Transitive reduction: b covers a iff b is a minimal element of the strict
    // up-set of a.
    L.upper_covers_.assign(n, {});
    L.lower_covers_.assign(n, {});
    L.upper_cover_sets_.assign(n, ElementSet(n));
    for (ElementId a = 0; a < n; ++a) {
        ElementSet strict = L.up_[a];
        strict.erase(a);
        ElementSet reduced = strict;
        strict.for_each([&](ElementId c) {
            ElementSet above_c = L.up_[c];
            above_c.erase(c);
            reduced -= above_c;
        });
        L.upper_cover_sets_[a] = reduced;
        reduced.for_each([&](ElementId b) {
            L.covers_.emplace_back(a, b);
            L.upper_covers_[a].push_back(b);
            L.lower_covers_[b].push_back(a);
        });
    }
    return L;
}

void Lattice::check(ElementId a) const {
    if (a >= n_)
        throw std::out_of_range("element " + std::to_string(a) + " outside lattice of size " + std::to_string(n_));
}

ElementId Lattice::meet_all(const std::vector<ElementId>& xs) const {
    ElementId m = top_;
    for (ElementId x : xs)
        m = meet(m, x);
    return m;
}

ElementId Lattice::join_all(const std::vector<ElementId>& xs) const {
    ElementId j = bottom_;
    for (ElementId x : xs)
        j = join(j, x);
    return j;
}

std::size_t length(const Lattice& L) { return interval_length(L, L.bottom(), L.top()); }

std::size_t interval_length(const Lattice& L, ElementId u, ElementId v) { return cover_path_lengths(L, u, v).longest; }

ElementSet interval(const Lattice& L, ElementId u, ElementId v) {
    if (!L.leq(u, v))
        throw NotComparable("interval bounds " + pair_text(u, v) + " are not ordered u <= v");
    return L.up_set(u) & L.down_set(v);
}

ElementSet ideal(const Lattice& L, ElementId a) {
    L.leq(a, a);
    return L.down_set(a);
}

ElementSet filter(const Lattice& L, ElementId a) {
    L.leq(a, a);
    return L.up_set(a);
}

bool is_sublattice(const Lattice& L, const ElementSet& S) {
    auto xs = S.members();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!S.contains(L.meet(xs[i], xs[j])) || !S.contains(L.join(xs[i], xs[j])))
                return false;
    return true;
}

ElementSet sublattice_closure(const Lattice& L, const ElementSet& X) {
    ElementSet S = X;
    std::vector<ElementId> members = X.members();
    std::deque<ElementId> pending(members.begin(), members.end());
    while (!pending.empty()) {
        ElementId e = pending.front();
        pending.pop_front();
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (ElementId r : {L.meet(e, members[i]), L.join(e, members[i])}) {
                if (!S.contains(r)) {
                    S.insert(r);
                    members.push_back(r);
                    pending.push_back(r);
                }
            }
        }
    }
    return S;
}

int subset_length(const Lattice& L, const ElementSet& S) {
    if (S.empty())
        return -1;
    std::vector<int> height(L.size(), -1);
    std::vector<ElementId> seen;
    int best = 0;
    for (ElementId x : L.linear_order()) {
        if (!S.contains(x))
            continue;
        int h = 0;
        for (ElementId y : seen)
            if (L.leq(y, x))
                h = std::max(h, height[y] + 1);
        height[x] = h;
        best = std::max(best, h);
        seen.push_back(x);
    }
    return best;
}

ChainLengths maximal_chain_lengths(const Lattice& L, ElementId x) {
    auto p = cover_path_lengths(L, L.bottom(), x);
    return {p.shortest, p.longest};
}

} // namespace rcsub
