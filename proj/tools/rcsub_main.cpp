#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rcsub/constructions.hpp"
#include "rcsub/frames.hpp"
#include "rcsub/lattice_io.hpp"
#include "rcsub/predicates.hpp"
#include "rcsub/rc_closure.hpp"
#include "rcsub/verify.hpp"

using namespace rcsub;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Bad user input; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

Lattice load_lattice(const std::string& path) { return parse_lattice(read_file(path)); }

int parse_int(std::string_view s, std::string_view what) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw UsageError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

Lattice generate(const std::string& name) {
    auto parts = split(name, ':');
    const auto& kind = parts[0];
    auto arg = [&](std::size_t i) {
        if (parts.size() <= i)
            throw UsageError("generator '" + std::string(kind) + "' needs more parameters");
        return parse_int(parts[i], "generator parameter");
    };
    auto arity = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw UsageError("generator '" + std::string(kind) + "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (kind == "chain") {
        arity(1);
        return chain(arg(1));
    }
    if (kind == "boolean") {
        arity(1);
        return boolean(arg(1));
    }
    if (kind == "diamond") {
        arity(1);
        return m_diamond(arg(1));
    }
    if (kind == "grid") {
        arity(2);
        return product(chain(arg(1)), chain(arg(2)));
    }
    arity(0);
    if (kind == "m3")
        return m_diamond(3);
    if (kind == "m4")
        return m_diamond(4);
    if (kind == "n5")
        return n5();
    if (kind == "fano")
        return fano_subspace_lattice();
    throw UsageError("unknown generator '" + name + "'");
}

std::string ids_text(const std::vector<ElementId>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i)
        s += (i ? " " : "") + std::to_string(ids[i]);
    return s;
}

int cmd_check(const std::string& path, const std::vector<std::string>& wanted) {
    const Lattice L = load_lattice(path);
    std::vector<std::string> names = wanted;
    if (names.empty())
        names = {"modular", "distributive", "2-distributive", "semimodular", "lower-semimodular",
                 "ranked",  "complemented", "boolean"};
    std::cout << "elements " << L.size() << ", length " << length(L) << "\n";
    int code = kExitPass;
    for (const auto& name : names) {
        IdentityCheck c;
        try {
            if (name == "modular")
                c = check_modular(L);
            else if (name == "distributive")
                c = check_n_distributive(L, 1);
            else if (name.size() > 13 && name.ends_with("-distributive"))
                c = check_n_distributive(L, parse_int(std::string_view(name).substr(0, name.size() - 13), "n"));
            else if (name == "semimodular")
                c = check_semimodular(L);
            else if (name == "lower-semimodular")
                c = check_lower_semimodular(L);
            else if (name == "ranked")
                c = check_ranked(L);
            else if (name == "complemented")
                c = check_complemented(L);
            else if (name == "boolean")
                c = {is_boolean(L), {}};
            else
                throw UsageError("unknown predicate '" + name + "'");
        } catch (const Overbudget& e) {
            std::cout << name << ": overbudget (" << e.what() << ")\n";
            code = kExitFail;
            continue;
        }
        std::cout << name << ": " << (c.holds ? "yes" : "no");
        if (!c.holds && !c.counterexample.empty())
            std::cout << " (witness " << ids_text(c.counterexample) << ")";
        std::cout << "\n";
        if (!c.holds)
            code = kExitFail;
    }
    return code;
}

int cmd_closure(const std::string& path, const std::string& set_text) {
    const Lattice L = load_lattice(path);
    ElementSet X(L.size());
    if (!set_text.empty())
        for (auto tok : split(set_text, ',')) {
            const int x = parse_int(tok, "element id");
            if (x < 0 || static_cast<std::size_t>(x) >= L.size())
                throw UsageError("element " + std::string(tok) + " out of range");
            X.insert(static_cast<ElementId>(x));
        }
    const ElementSet closed = rc_closure(L, X);
    std::cout << closed.to_string() << "\n";
    std::cout << "size " << closed.size() << ", length " << subset_length(L, closed) << "\n";
    return kExitPass;
}

int cmd_enumerate(const std::string& path, const std::string& dot_path, bool list, const EnumerationBudget& budget) {
    const Lattice L = load_lattice(path);
    const ClosureFamily family = enumerate_rcsub(L, budget);
    if (list)
        for (const auto& s : family.closed_sets())
            std::cout << s.to_string() << "\n";
    std::cout << "closed sets: " << family.size() << "\n";
    std::cout << "length: " << rcsub_length(family) << " (lattice length " << length(L) << ")\n";
    std::cout << "ranked: " << (rcsub_is_ranked(family) ? "yes" : "no") << "\n";
    if (!dot_path.empty())
        write_output(dot_path, export_dot(family, "rcsub"));
    return kExitPass;
}

int cmd_frames(const std::string& path, int order) {
    const Lattice L = load_lattice(path);
    auto w = find_frame(L, order);
    if (!w) {
        std::cout << "no " << order << "-frame\n";
        return kExitPass;
    }
    std::cout << "a: " << ids_text(w->a) << "\n";
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            std::cout << "c" << i + 1 << j + 1 << ": " << w->c_at(i, j) << "\n";
    std::cout << "0F: " << w->zero_f << ", 1F: " << w->one_f << "\n";
    std::cout << "verified: " << (verify_frame(L, *w) ? "yes" : "no") << "\n";
    return verify_frame(L, *w) ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite_name, std::string corpus, std::uint64_t seed, std::size_t samples,
               const std::string& out, bool timing) {
    auto suite = parse_suite(suite_name);
    if (!suite)
        throw UsageError("unknown suite '" + suite_name + "'");
    if (corpus.empty())
        corpus = std::string(default_corpus(*suite));
    VerifyOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    auto report = verify(*suite, corpus, load_corpus(corpus, seed), opts);
    write_output(out, report.to_json(timing) + "\n");
    auto s = report.summary();
    std::cerr << suite_name << " on " << corpus << ": " << s.passed << " passed, " << s.failed << " failed, "
              << s.overbudget << " overbudget, " << s.skipped << " skipped\n";
    return report.all_passed() ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RC-closed sublattices of finite lattices"};
    app.require_subcommand(1);

    std::string file, out, dot, set_text, name, suite, corpus;
    std::vector<std::string> predicates;
    int order = 2, k = 0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = 0;
    bool list = false, no_timing = false;
    EnumerationBudget budget;

    auto* gen = app.add_subcommand("gen", "Write a standard lattice in the text format");
    gen->add_option("name", name, "chain:K, boolean:K, diamond:K, grid:A:B, m3, m4, n5 or fano")->required();
    gen->add_option("--out,-o", out, "Output file (default stdout)");

    auto* check = app.add_subcommand("check", "Test lattice predicates");
    check->add_option("file", file)->required();
    check->add_option("--predicate,-p", predicates,
                      "modular, distributive, N-distributive, semimodular, lower-semimodular, ranked, "
                      "complemented, boolean (default all)");

    auto* closure = app.add_subcommand("closure", "RC-closure of a set of elements");
    closure->add_option("file", file)->required();
    closure->add_option("--set", set_text, "Comma-separated element ids")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate all RC-closed sublattices");
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--dot", dot, "Write the inclusion order as DOT");
    enumerate->add_flag("--list", list, "Print every closed set");
    enumerate->add_option("--max-elements", budget.max_elements, "Largest lattice to enumerate");
    enumerate->add_option("--max-sets", budget.max_closed_sets, "Largest family to enumerate");

    auto* frames = app.add_subcommand("frames", "Search for a von Neumann frame");
    frames->add_option("file", file)->required();
    frames->add_option("--order,-n", order, "Frame order")->check(CLI::Range(2, 16));

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    verify_cmd->add_option("suite", suite, "thm1, thm3, thm2-contrapositive, lemma-rcgen, closure-axioms, "
                                           "huhn-frames or boolean-semimodular")
        ->required();
    verify_cmd->add_option("--corpus", corpus, "zoo, posets4, fano or a lattice file");
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--samples", samples, "Random samples for the sampling suites");
    verify_cmd->add_option("--out,-o", out, "Report file (default stdout)");
    verify_cmd->add_flag("--no-timing", no_timing, "Leave elapsed_ms out of the report");

    auto* count = app.add_subcommand("count", "Count RC-closed sublattices of a Boolean lattice");
    count->add_option("--boolean", k, "Order k of B_k")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*gen) {
            write_output(out, serialize_lattice(generate(name)));
            return kExitPass;
        }
        if (*check)
            return cmd_check(file, predicates);
        if (*closure)
            return cmd_closure(file, set_text);
        if (*enumerate)
            return cmd_enumerate(file, dot, list, budget);
        if (*frames)
            return cmd_frames(file, order);
        if (*verify_cmd)
            return cmd_verify(suite, corpus, seed, samples, out, !no_timing);
        if (*count) {
            std::cout << count_rcsub(k) << "\n";
            return kExitPass;
        }
    } catch (const ParseError& e) {
        std::cerr << "rcsub: " << file << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "rcsub: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rcsub: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Overbudget& e) {
        std::cerr << "rcsub: overbudget: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        std::cerr << "rcsub: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
