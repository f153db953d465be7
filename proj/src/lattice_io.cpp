#include "rcsub/lattice_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace rcsub {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            words.push_back(line.substr(start, i - start));
    }
    return words;
}

std::size_t parse_number(std::string_view word, std::size_t line_no) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(word) + "'");
    return value;
}

} // namespace

Lattice parse_lattice(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<CoverPair> covers;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto words = split_words(line);
        if (words.empty())
            continue;

        if (words[0] == "elements") {
            if (n)
                throw ParseError(line_no, "duplicate 'elements' line");
            if (words.size() != 2)
                throw ParseError(line_no, "expected 'elements <n>'");
            n = parse_number(words[1], line_no);
        } else if (words[0] == "cover") {
            if (!n)
                throw ParseError(line_no, "'cover' before 'elements'");
            if (words.size() != 3)
                throw ParseError(line_no, "expected 'cover <i> <j>'");
            std::size_t a = parse_number(words[1], line_no);
            std::size_t b = parse_number(words[2], line_no);
            if (a >= *n || b >= *n)
                throw ParseError(line_no, "cover " + std::to_string(a) + " " + std::to_string(b) +
                                              " references an element outside 0.." + std::to_string(*n - 1));
            covers.emplace_back(static_cast<ElementId>(a), static_cast<ElementId>(b));
        } else {
            throw ParseError(line_no, "unknown directive '" + std::string(words[0]) + "'");
        }
    }
    if (!n)
        throw ParseError(line_no, "missing 'elements <n>' line");
    return Lattice::from_covers(*n, covers);
}

std::string serialize_lattice(const Lattice& L) {
    std::ostringstream out;
    out << "elements " << L.size() << '\n';
    for (auto [a, b] : L.covers())
        out << "cover " << a << ' ' << b << '\n';
    return out.str();
}

std::string export_dot(const Lattice& L, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  { rank=min; n" << L.bottom() << "; }\n";
    for (ElementId x = 0; x < L.size(); ++x)
        out << "  n" << x << " [label=\"" << x << "\"];\n";
    for (auto [a, b] : L.covers())
        out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_dot(const ClosureFamily& family, std::string_view name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    out << "  rankdir=BT;\n";
    out << "  { rank=min; n" << family.empty_index() << "; }\n";
    for (FamilyIndex i = 0; i < family.size(); ++i)
        out << "  n" << i << " [label=\"" << family.at(i).to_string() << "\"];\n";
    for (auto [a, b] : family.inclusion_covers())
        out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace rcsub
