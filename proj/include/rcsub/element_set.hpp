#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace rcsub {

using ElementId = std::uint32_t;

// A subset of {0, ..., universe-1}, stored as a packed bitset. Sets are tied
// to a lattice only by convention: the universe is the lattice's element count.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe);
    ElementSet(std::size_t universe, std::initializer_list<ElementId> members);
    ElementSet(std::size_t universe, const std::vector<ElementId>& members);

    static ElementSet full(std::size_t universe);
    // {0, ..., bound-1}
    static ElementSet prefix(std::size_t universe, std::size_t bound);

    std::size_t universe() const { return universe_; }

    bool contains(ElementId x) const {
        return x < universe_ && ((words_[x >> 6] >> (x & 63)) & 1u);
    }
    void insert(ElementId x);
    void erase(ElementId x);
    void clear();

    std::size_t size() const;
    bool empty() const;

    bool is_subset_of(const ElementSet& other) const;
    bool is_proper_subset_of(const ElementSet& other) const;

    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);
    ElementSet& operator-=(const ElementSet& other);

    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    // Smallest member, or universe() when empty.
    ElementId first() const;
    // Smallest member greater than x, or universe() if none.
    ElementId next(ElementId x) const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(static_cast<ElementId>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<ElementId> members() const;

    // "{0,3,5}"
    std::string to_string() const;

    std::size_t hash() const;

private:
    void check_same_universe(const ElementSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace rcsub

template <>
struct std::hash<rcsub::ElementSet> {
    std::size_t operator()(const rcsub::ElementSet& s) const noexcept { return s.hash(); }
};
