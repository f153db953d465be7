#include "rcsub/element_set.hpp"

#include <stdexcept>

namespace rcsub {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

} // namespace

ElementSet::ElementSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<ElementId> members) : ElementSet(universe) {
    for (ElementId x : members)
        insert(x);
}

ElementSet::ElementSet(std::size_t universe, const std::vector<ElementId>& members) : ElementSet(universe) {
    for (ElementId x : members)
        insert(x);
}

ElementSet ElementSet::full(std::size_t universe) { return prefix(universe, universe); }

ElementSet ElementSet::prefix(std::size_t universe, std::size_t bound) {
    if (bound > universe)
        throw std::out_of_range("ElementSet::prefix: bound exceeds universe");
    ElementSet s(universe);
    for (std::size_t w = 0; w < bound / 64; ++w)
        s.words_[w] = ~std::uint64_t{0};
    if (bound % 64)
        s.words_[bound / 64] = (std::uint64_t{1} << (bound % 64)) - 1;
    return s;
}

void ElementSet::insert(ElementId x) {
    if (x >= universe_)
        throw std::out_of_range("element " + std::to_string(x) + " outside universe of size " +
                                std::to_string(universe_));
    words_[x >> 6] |= std::uint64_t{1} << (x & 63);
}

void ElementSet::erase(ElementId x) {
    if (x < universe_)
        words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
}

void ElementSet::clear() {
    for (auto& w : words_)
        w = 0;
}

std::size_t ElementSet::size() const {
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
}

bool ElementSet::empty() const {
    for (auto w : words_)
        if (w)
            return false;
    return true;
}

void ElementSet::check_same_universe(const ElementSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("ElementSet: mixing sets over universes of size " + std::to_string(universe_) +
                                    " and " + std::to_string(other.universe_));
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & ~other.words_[w])
            return false;
    return true;
}

bool ElementSet::is_proper_subset_of(const ElementSet& other) const {
    return is_subset_of(other) && words_ != other.words_;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] |= other.words_[w];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= other.words_[w];
    return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= ~other.words_[w];
    return *this;
}

ElementId ElementSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return static_cast<ElementId>(w * 64 + __builtin_ctzll(words_[w]));
    return static_cast<ElementId>(universe_);
}

ElementId ElementSet::next(ElementId x) const {
    std::size_t start = static_cast<std::size_t>(x) + 1;
    if (start >= universe_)
        return static_cast<ElementId>(universe_);
    std::size_t w = start >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (start & 63));
    while (true) {
        if (bits)
            return static_cast<ElementId>(w * 64 + __builtin_ctzll(bits));
        if (++w == words_.size())
            return static_cast<ElementId>(universe_);
        bits = words_[w];
    }
}

std::vector<ElementId> ElementSet::members() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for_each([&](ElementId x) { out.push_back(x); });
    return out;
}

std::string ElementSet::to_string() const {
    std::string s = "{";
    bool first_member = true;
    for_each([&](ElementId x) {
        if (!first_member)
            s += ',';
        s += std::to_string(x);
        first_member = false;
    });
    s += '}';
    return s;
}

std::size_t ElementSet::hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_)
        h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
}

} // namespace rcsub
