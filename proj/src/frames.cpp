#include "rcsub/frames.hpp"

#include <stdexcept>
#include <string>

namespace rcsub {

FrameWitness FrameWitness::with_axes(const Lattice& L, std::vector<ElementId> axes) {
    FrameWitness w;
    w.order = static_cast<int>(axes.size());
    w.zero_f = L.meet_all(axes);
    w.one_f = L.join_all(axes);
    w.a = std::move(axes);
    w.c.assign(static_cast<std::size_t>(w.order * w.order), 0);
    return w;
}

bool verify_frame(const Lattice& L, const FrameWitness& w) {
    const int n = w.order;
    if (n < 2 || w.a.size() != static_cast<std::size_t>(n) || w.c.size() != static_cast<std::size_t>(n * n))
        return false;
    if (w.zero_f != L.meet_all(w.a) || w.one_f != L.join_all(w.a) || w.zero_f == w.one_f)
        return false;

    for (int j = 0; j < n; ++j) {
        ElementId others = L.bottom();
        for (int t = 0; t < n; ++t)
            if (t != j)
                others = L.join(others, w.a[t]);
        if (L.meet(w.a[j], others) != w.zero_f)
            return false;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (w.c_at(i, j) != w.c_at(j, i))
                return false;
            if (L.meet(w.a[i], w.c_at(i, j)) != w.zero_f)
                return false;
            if (L.join(w.a[i], w.c_at(i, j)) != L.join(w.a[i], w.a[j]))
                return false;
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j)
                    continue;
                if (w.c_at(i, k) != L.meet(L.join(w.a[i], w.a[k]), L.join(w.c_at(i, j), w.c_at(j, k))))
                    return false;
            }
        }
    }
    return true;
}

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
        if (c > ~std::uint64_t{0})
            return ~std::uint64_t{0};
    }
    return static_cast<std::uint64_t>(c);
}

class FrameSearch {
public:
    FrameSearch(const Lattice& L, int order) : L_(L), order_(order) {}

    std::optional<FrameWitness> run() {
        std::vector<ElementId> axes;
        if (choose_axes(axes, 0))
            return found_;
        return std::nullopt;
    }

private:
    bool choose_axes(std::vector<ElementId>& axes, ElementId from) {
        if (static_cast<int>(axes.size()) == order_)
            return try_axes(axes);
        for (ElementId x = from; x < L_.size(); ++x) {
            axes.push_back(x);
            if (choose_axes(axes, x + 1))
                return true;
            axes.pop_back();
        }
        return false;
    }

    bool independent(const FrameWitness& w) const {
        for (int j = 0; j < order_; ++j) {
            ElementId others = L_.bottom();
            for (int t = 0; t < order_; ++t)
                if (t != j)
                    others = L_.join(others, w.a[t]);
            if (L_.meet(w.a[j], others) != w.zero_f)
                return false;
        }
        return true;
    }

    bool try_axes(const std::vector<ElementId>& axes) {
        FrameWitness w = FrameWitness::with_axes(L_, axes);
        if (w.zero_f == w.one_f || !independent(w))
            return false;

        // Common complements of a_0 and a_j inside [zero_f, a_0 v a_j].
        std::vector<std::vector<ElementId>> candidates(static_cast<std::size_t>(order_));
        for (int j = 1; j < order_; ++j) {
            const ElementId top = L_.join(w.a[0], w.a[j]);
            for (ElementId y = 0; y < L_.size(); ++y)
                if (L_.meet(w.a[0], y) == w.zero_f && L_.join(w.a[0], y) == top && L_.meet(w.a[j], y) == w.zero_f &&
                    L_.join(w.a[j], y) == top)
                    candidates[j].push_back(y);
            if (candidates[j].empty())
                return false;
        }

        std::vector<std::size_t> pick(static_cast<std::size_t>(order_), 0);
        while (true) {
            for (int j = 1; j < order_; ++j) {
                w.set_c(0, j, candidates[j][pick[j]]);
                w.set_c(j, 0, candidates[j][pick[j]]);
            }
            for (int j = 1; j < order_; ++j)
                for (int k = 1; k < order_; ++k)
                    if (j != k)
                        w.set_c(j, k, L_.meet(L_.join(w.a[j], w.a[k]), L_.join(w.c_at(j, 0), w.c_at(0, k))));
            if (verify_frame(L_, w)) {
                found_ = w;
                return true;
            }
            int pos = order_ - 1;
            while (pos >= 1 && pick[pos] + 1 == candidates[pos].size())
                pick[pos--] = 0;
            if (pos < 1)
                return false;
            ++pick[pos];
        }
    }

    const Lattice& L_;
    int order_;
    FrameWitness found_;
};

} // namespace

std::optional<FrameWitness> find_frame(const Lattice& L, int order, std::uint64_t budget) {
    if (order < 2)
        throw std::invalid_argument("frame order must be at least 2, got " + std::to_string(order));
    const std::uint64_t tuples = binomial_saturating(L.size(), static_cast<std::uint64_t>(order));
    if (tuples > budget)
        throw Overbudget("frame search over " + std::to_string(tuples) + " axis tuples exceeds budget " +
                         std::to_string(budget));
    return FrameSearch(L, order).run();
}

} // namespace rcsub
