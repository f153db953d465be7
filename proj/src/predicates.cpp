#include "rcsub/predicates.hpp"

#include <stdexcept>
#include <string>

namespace rcsub {

namespace {

IdentityCheck violated(std::vector<ElementId> witness) { return {false, std::move(witness)}; }

// Number of non-decreasing k-tuples over n symbols times n, saturating at
// UINT64_MAX.
std::uint64_t multiset_scan_size(std::uint64_t n, int k) {
    constexpr std::uint64_t cap = ~std::uint64_t{0};
    // C(n + k - 1, k), computed incrementally; stays exact while it fits.
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * (n + static_cast<std::uint64_t>(i) - 1) / static_cast<std::uint64_t>(i);
        if (c > cap)
            return cap;
    }
    c *= n;
    return c > cap ? cap : static_cast<std::uint64_t>(c);
}

} // namespace

IdentityCheck check_modular(const Lattice& L) {
    const ElementId n = static_cast<ElementId>(L.size());
    for (ElementId x = 0; x < n; ++x) {
        for (ElementId z : L.up_set(x).members()) {
            if (x == z)
                continue;
            for (ElementId y = 0; y < n; ++y)
                if (L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), z))
                    return violated({x, y, z});
        }
    }
    return {};
}

IdentityCheck check_n_distributive(const Lattice& L, int n, std::uint64_t budget) {
    if (n < 1)
        throw std::invalid_argument("n-distributivity needs n >= 1, got " + std::to_string(n));
    const std::size_t size = L.size();
    const int arity = n + 1;
    const std::uint64_t work = multiset_scan_size(size, arity);
    if (work > budget)
        throw Overbudget(std::to_string(n) + "-distributivity scan of " + std::to_string(size) +
                         " elements needs " + std::to_string(work) + " tuples, budget is " + std::to_string(budget));

    // Both sides are symmetric in the y_i, so non-decreasing tuples suffice.
    std::vector<ElementId> y(arity, 0);
    std::vector<ElementId> prefix(arity + 1), suffix(arity + 1), leave_one_out(arity);
    while (true) {
        prefix[0] = L.bottom();
        for (int i = 0; i < arity; ++i)
            prefix[i + 1] = L.join(prefix[i], y[i]);
        suffix[arity] = L.bottom();
        for (int i = arity - 1; i >= 0; --i)
            suffix[i] = L.join(suffix[i + 1], y[i]);
        for (int j = 0; j < arity; ++j)
            leave_one_out[j] = L.join(prefix[j], suffix[j + 1]);
        const ElementId total = prefix[arity];

        for (ElementId x = 0; x < size; ++x) {
            ElementId lhs = L.meet(x, total);
            ElementId rhs = L.bottom();
            for (int j = 0; j < arity; ++j)
                rhs = L.join(rhs, L.meet(x, leave_one_out[j]));
            if (lhs != rhs) {
                std::vector<ElementId> witness{x};
                witness.insert(witness.end(), y.begin(), y.end());
                return violated(std::move(witness));
            }
        }

        int pos = arity - 1;
        while (pos >= 0 && y[pos] + 1 == size)
            --pos;
        if (pos < 0)
            break;
        ++y[pos];
        for (int i = pos + 1; i < arity; ++i)
            y[i] = y[pos];
    }
    return {};
}

IdentityCheck check_semimodular(const Lattice& L) {
    const ElementId n = static_cast<ElementId>(L.size());
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (L.covered_by(L.meet(a, b), a) && !L.covered_by(b, L.join(a, b)))
                return violated({a, b});
    return {};
}

IdentityCheck check_lower_semimodular(const Lattice& L) {
    const ElementId n = static_cast<ElementId>(L.size());
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (L.covered_by(b, L.join(a, b)) && !L.covered_by(L.meet(a, b), a))
                return violated({a, b});
    return {};
}

IdentityCheck check_ranked(const Lattice& L) {
    for (ElementId x : L.linear_order()) {
        auto lengths = maximal_chain_lengths(L, x);
        if (lengths.shortest != lengths.longest)
            return violated({x});
    }
    return {};
}

IdentityCheck check_complemented(const Lattice& L) {
    const ElementId n = static_cast<ElementId>(L.size());
    for (ElementId x = 0; x < n; ++x) {
        bool found = false;
        for (ElementId y = 0; y < n && !found; ++y)
            found = L.meet(x, y) == L.bottom() && L.join(x, y) == L.top();
        if (!found)
            return violated({x});
    }
    return {};
}

bool is_modular(const Lattice& L) { return check_modular(L).holds; }

bool is_n_distributive(const Lattice& L, int n, std::uint64_t budget) {
    return check_n_distributive(L, n, budget).holds;
}

bool is_distributive(const Lattice& L) { return is_n_distributive(L, 1); }

bool is_semimodular(const Lattice& L) { return check_semimodular(L).holds; }

bool is_lower_semimodular(const Lattice& L) { return check_lower_semimodular(L).holds; }

bool is_ranked(const Lattice& L) { return check_ranked(L).holds; }

bool is_complemented(const Lattice& L) { return check_complemented(L).holds; }

bool is_boolean(const Lattice& L) {
    // A Boolean lattice of length k has exactly 2^k elements; this rejects
    // most inputs before the cubic distributivity scan.
    const std::size_t len = length(L);
    if (len >= 63 || L.size() != (std::size_t{1} << len))
        return false;
    return is_complemented(L) && is_distributive(L);
}

} // namespace rcsub
