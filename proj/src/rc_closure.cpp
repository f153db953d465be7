#include "rcsub/rc_closure.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rcsub {

namespace {

// y belongs to relative_complements(x ^ y, x, x v y), so RC-closedness of a
// sublattice S is equivalent to: x in S, x ^ y in S and x v y in S force y in S.
// Adds every such y once; returns whether anything was added.
bool add_forced_complements(const Lattice& L, ElementSet& S) {
    bool added = false;
    const auto members = S.members();
    for (ElementId x : members) {
        for (ElementId y = 0; y < L.size(); ++y) {
            if (S.contains(y))
                continue;
            if (S.contains(L.meet(x, y)) && S.contains(L.join(x, y))) {
                S.insert(y);
                added = true;
            }
        }
    }
    return added;
}

struct PathTables {
    std::vector<std::size_t> shortest;
    std::vector<std::size_t> longest;
    std::vector<FamilyIndex> shortest_parent;
    std::vector<FamilyIndex> longest_parent;
};

// Cover-path lengths from the empty set, visiting members by cardinality.
PathTables path_tables(const ClosureFamily& family) {
    const std::size_t m = family.size();
    std::vector<FamilyIndex> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](FamilyIndex a, FamilyIndex b) {
        return family.at(a).size() < family.at(b).size();
    });
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    PathTables t{std::vector<std::size_t>(m, unset), std::vector<std::size_t>(m, 0), std::vector<FamilyIndex>(m, m),
                 std::vector<FamilyIndex>(m, m)};
    t.shortest[family.empty_index()] = 0;
    for (FamilyIndex i : order) {
        if (t.shortest[i] == unset)
            continue;
        for (FamilyIndex j : family.upper_covers(i)) {
            if (t.shortest[i] + 1 < t.shortest[j]) {
                t.shortest[j] = t.shortest[i] + 1;
                t.shortest_parent[j] = i;
            }
            if (t.longest[i] + 1 > t.longest[j]) {
                t.longest[j] = t.longest[i] + 1;
                t.longest_parent[j] = i;
            }
        }
    }
    return t;
}

std::vector<FamilyIndex> walk_back(const ClosureFamily& family, const std::vector<FamilyIndex>& parent) {
    std::vector<FamilyIndex> chain{family.full_index()};
    while (chain.back() != family.empty_index())
        chain.push_back(parent[chain.back()]);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

} // namespace

ElementSet relative_complements(const Lattice& L, ElementId u, ElementId x, ElementId v) {
    ElementSet out(L.size());
    for (ElementId y = 0; y < L.size(); ++y)
        if (L.meet(x, y) == u && L.join(x, y) == v)
            out.insert(y);
    return out;
}

bool is_rc_closed(const Lattice& L, const ElementSet& S) {
    if (S.universe() != L.size())
        throw std::invalid_argument("set over universe " + std::to_string(S.universe()) +
                                    " used with a lattice of size " + std::to_string(L.size()));
    if (!is_sublattice(L, S))
        return false;
    ElementSet probe = S;
    return !add_forced_complements(L, probe);
}

ElementSet rc_closure(const Lattice& L, const ElementSet& X) {
    if (X.universe() != L.size())
        throw std::invalid_argument("set over universe " + std::to_string(X.universe()) +
                                    " used with a lattice of size " + std::to_string(L.size()));
    ElementSet S = X;
    do {
        S = sublattice_closure(L, S);
    } while (add_forced_complements(L, S));
    return S;
}

ClosureFamily ClosureFamily::from_closed_sets(const Lattice& L, std::vector<ElementSet> sets) {
    ClosureFamily f;
    f.universe_ = L.size();
    f.closed_sets_ = std::move(sets);
    const std::size_t m = f.closed_sets_.size();
    for (FamilyIndex i = 0; i < m; ++i) {
        if (f.closed_sets_[i].universe() != L.size())
            throw std::invalid_argument("closed set " + f.closed_sets_[i].to_string() + " has the wrong universe");
        if (!f.index_.emplace(f.closed_sets_[i], i).second)
            throw std::invalid_argument("duplicate closed set " + f.closed_sets_[i].to_string());
    }
    auto empty = f.index_of(ElementSet(L.size()));
    auto full = f.index_of(ElementSet::full(L.size()));
    if (!empty || !full)
        throw std::invalid_argument("a closure family must contain the empty set and the whole lattice");
    f.empty_ = *empty;
    f.full_ = *full;

    f.upper_.assign(m, {});
    f.lower_.assign(m, {});
    f.lengths_.resize(m);
    for (FamilyIndex i = 0; i < m; ++i) {
        const ElementSet& U = f.closed_sets_[i];
        f.lengths_[i] = subset_length(L, U);
        // Upper covers of U are the minimal members among the closures of U + e.
        std::vector<FamilyIndex> candidates;
        for (ElementId e = 0; e < L.size(); ++e) {
            if (U.contains(e))
                continue;
            ElementSet grown = U;
            grown.insert(e);
            auto idx = f.index_of(rc_closure(L, grown));
            if (!idx)
                throw std::invalid_argument("family is missing the closure of " + grown.to_string());
            candidates.push_back(*idx);
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (FamilyIndex c : candidates) {
            bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](FamilyIndex d) {
                return d != c && f.closed_sets_[d].is_proper_subset_of(f.closed_sets_[c]);
            });
            if (minimal) {
                f.upper_[i].push_back(c);
                f.lower_[c].push_back(i);
                f.covers_.emplace_back(i, c);
            }
        }
    }
    return f;
}

std::optional<FamilyIndex> ClosureFamily::index_of(const ElementSet& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

ClosureFamily enumerate_rcsub(const Lattice& L, const EnumerationBudget& budget) {
    const std::size_t n = L.size();
    if (n > budget.max_elements)
        throw Overbudget("enumerating RC-closed sublattices of " + std::to_string(n) +
                         " elements exceeds the element budget of " + std::to_string(budget.max_elements));

    std::vector<ElementSet> sets;
    ElementSet current = rc_closure(L, ElementSet(n));
    const ElementSet full = ElementSet::full(n);
    sets.push_back(current);
    while (current != full) {
        bool advanced = false;
        for (std::size_t i = n; i-- > 0;) {
            const ElementId e = static_cast<ElementId>(i);
            if (current.contains(e))
                continue;
            const ElementSet below = ElementSet::prefix(n, i);
            ElementSet seed = current & below;
            seed.insert(e);
            ElementSet next = rc_closure(L, seed);
            // Canonicity: the closure may not add anything smaller than e.
            if ((next & below) == (current & below)) {
                current = std::move(next);
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw std::logic_error("NextClosure failed to advance; rc_closure is not a closure operator");
        if (sets.size() >= budget.max_closed_sets)
            throw Overbudget("more than " + std::to_string(budget.max_closed_sets) + " RC-closed sublattices");
        sets.push_back(current);
    }
    return ClosureFamily::from_closed_sets(L, std::move(sets));
}

std::size_t rcsub_length(const ClosureFamily& family) {
    return path_tables(family).longest[family.full_index()];
}

bool rcsub_is_ranked(const ClosureFamily& family) {
    auto t = path_tables(family);
    for (FamilyIndex i = 0; i < family.size(); ++i)
        if (t.shortest[i] != t.longest[i])
            return false;
    return true;
}

bool covers_in_rcsub(const ClosureFamily& family, FamilyIndex U, FamilyIndex V) {
    const ElementSet& lower = family.at(U);
    const ElementSet& upper = family.at(V);
    if (!lower.is_proper_subset_of(upper))
        return false;
    for (const ElementSet& W : family.closed_sets())
        if (lower.is_proper_subset_of(W) && W.is_proper_subset_of(upper))
            return false;
    return true;
}

std::vector<FamilyIndex> shortest_maximal_chain(const ClosureFamily& family) {
    return walk_back(family, path_tables(family).shortest_parent);
}

std::vector<FamilyIndex> longest_maximal_chain(const ClosureFamily& family) {
    return walk_back(family, path_tables(family).longest_parent);
}

Lattice family_lattice(const ClosureFamily& family) {
    std::vector<CoverPair> covers;
    covers.reserve(family.inclusion_covers().size());
    for (auto [lo, hi] : family.inclusion_covers())
        covers.emplace_back(static_cast<ElementId>(lo), static_cast<ElementId>(hi));
    return Lattice::from_covers(family.size(), covers);
}

} // namespace rcsub
