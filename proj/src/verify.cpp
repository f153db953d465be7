#include "rcsub/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include <json.hpp>

#include "rcsub/constructions.hpp"
#include "rcsub/frames.hpp"
#include "rcsub/lattice_io.hpp"
#include "rcsub/predicates.hpp"

namespace rcsub {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
    CheckStatus status;
    std::string detail;
};

Outcome passed(std::string detail) { return {CheckStatus::pass, std::move(detail)}; }
Outcome failed(std::string detail) { return {CheckStatus::fail, std::move(detail)}; }
Outcome skipped(std::string detail) { return {CheckStatus::skipped, std::move(detail)}; }

template <typename Body>
CheckResult run_check(std::string id, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.id = std::move(id);
    try {
        Outcome o = body();
        r.status = o.status;
        r.detail = std::move(o.detail);
    } catch (const Overbudget& e) {
        r.status = CheckStatus::overbudget;
        r.detail = e.what();
    } catch (const Error& e) {
        r.status = CheckStatus::fail;
        r.detail = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string ids_text(const std::vector<ElementId>& ids) {
    std::string s = "(";
    for (std::size_t i = 0; i < ids.size(); ++i)
        s += (i ? "," : "") + std::to_string(ids[i]);
    return s + ")";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// Families are enumerated at most once per lattice within a suite run.
class FamilyCache {
public:
    explicit FamilyCache(EnumerationBudget budget) : budget_(budget) {}

    const ClosureFamily& get(const NamedLattice& nl) {
        auto it = cache_.find(nl.name);
        if (it == cache_.end())
            it = cache_.emplace(nl.name, enumerate_rcsub(nl.lattice, budget_)).first;
        return it->second;
    }

private:
    EnumerationBudget budget_;
    std::map<std::string, ClosureFamily> cache_;
};

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) { return rng() % n; }

// A chain inside S (a subset of L) of length subset_length(L, S), chosen at
// random among such chains.
std::vector<ElementId> random_longest_chain(const Lattice& L, const ElementSet& S, Rng& rng) {
    std::vector<int> height(L.size(), -1);
    int best = -1;
    for (ElementId x : L.linear_order()) {
        if (!S.contains(x))
            continue;
        int h = 0;
        S.for_each([&](ElementId y) {
            if (height[y] >= 0 && L.less(y, x))
                h = std::max(h, height[y] + 1);
        });
        height[x] = h;
        best = std::max(best, h);
    }
    std::vector<ElementId> tops;
    S.for_each([&](ElementId x) {
        if (height[x] == best)
            tops.push_back(x);
    });
    std::vector<ElementId> chain{tops[uniform_below(rng, tops.size())]};
    while (height[chain.back()] > 0) {
        std::vector<ElementId> next;
        S.for_each([&](ElementId y) {
            if (height[y] == height[chain.back()] - 1 && L.less(y, chain.back()))
                next.push_back(y);
        });
        chain.push_back(next[uniform_below(rng, next.size())]);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

// Members of `universe` kept independently with probability 1/k.
ElementSet random_subset(const ElementSet& universe_set, std::uint64_t k, Rng& rng) {
    ElementSet out(universe_set.universe());
    universe_set.for_each([&](ElementId x) {
        if (uniform_below(rng, k) == 0)
            out.insert(x);
    });
    return out;
}

// Cover path from `from` up to the whole lattice with the fewest steps.
std::vector<FamilyIndex> shortest_upward_path(const ClosureFamily& family, FamilyIndex from) {
    std::vector<FamilyIndex> parent(family.size(), family.size());
    std::deque<FamilyIndex> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        FamilyIndex i = queue.front();
        queue.pop_front();
        if (i == family.full_index())
            break;
        for (FamilyIndex j : family.upper_covers(i))
            if (parent[j] == family.size()) {
                parent[j] = i;
                queue.push_back(j);
            }
    }
    std::vector<FamilyIndex> path{family.full_index()};
    while (path.back() != from)
        path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

void run_thm1(const std::vector<NamedLattice>& corpus, FamilyCache& cache, VerificationReport& report) {
    for (const auto& nl : corpus) {
        report.checks.push_back(run_check("thm1/" + nl.name, [&] {
            const auto& family = cache.get(nl);
            const std::size_t expected = 1 + length(nl.lattice);
            const std::size_t got = rcsub_length(family);
            std::string detail = "len RCSub = " + std::to_string(got) + ", 1 + len L = " + std::to_string(expected) +
                                 ", |RCSub| = " + std::to_string(family.size());
            return got == expected ? passed(detail) : failed(detail);
        }));
    }
}

void run_thm3(const std::vector<NamedLattice>& corpus, FamilyCache& cache, VerificationReport& report) {
    for (const auto& nl : corpus) {
        const bool distributive = is_distributive(nl.lattice);
        report.checks.push_back(run_check("thm3/ranked/" + nl.name, [&] {
            if (!distributive)
                return skipped("not distributive");
            const auto& family = cache.get(nl);
            return rcsub_is_ranked(family) ? passed("|RCSub| = " + std::to_string(family.size()))
                                           : failed("RCSub is not ranked");
        }));
        report.checks.push_back(run_check("thm3/covers/" + nl.name, [&] {
            if (!distributive)
                return skipped("not distributive");
            const auto& family = cache.get(nl);
            std::set<std::pair<FamilyIndex, FamilyIndex>> covers(family.inclusion_covers().begin(),
                                                                 family.inclusion_covers().end());
            std::size_t pairs = 0;
            for (FamilyIndex u = 0; u < family.size(); ++u) {
                for (FamilyIndex v = 0; v < family.size(); ++v) {
                    if (!family.at(u).is_proper_subset_of(family.at(v)))
                        continue;
                    ++pairs;
                    const bool is_cover = covers.count({u, v}) > 0;
                    const bool one_longer = family.lengths()[v] == family.lengths()[u] + 1;
                    if (is_cover != one_longer)
                        return failed("U = " + family.at(u).to_string() + ", V = " + family.at(v).to_string() +
                                      ": cover " + bool_text(is_cover) + ", len V = len U + 1 " +
                                      bool_text(one_longer));
                }
            }
            return passed(std::to_string(pairs) + " nested pairs agree");
        }));
    }
}

void run_thm2(const std::vector<NamedLattice>& corpus, FamilyCache& cache, VerificationReport& report) {
    for (const auto& nl : corpus) {
        const Lattice& L = nl.lattice;
        const std::string prefix = "thm2/" + nl.name + "/";
        report.checks.push_back(run_check(prefix + "modular", [&] {
            auto c = check_modular(L);
            return c.holds ? passed("modular") : failed("modular law fails at " + ids_text(c.counterexample));
        }));
        report.checks.push_back(run_check(prefix + "not-2-distributive", [&] {
            auto c = check_n_distributive(L, 2);
            return c.holds ? failed("2-distributive") : passed("fails at (x,y0,y1,y2) = " + ids_text(c.counterexample));
        }));

        std::optional<FrameWitness> frame;
        report.checks.push_back(run_check(prefix + "frame-3", [&] {
            frame = find_frame(L, 3);
            if (!frame)
                return failed("no von Neumann 3-frame");
            if (!verify_frame(L, *frame))
                return failed("search returned an invalid frame");
            return passed("a = " + ids_text(frame->a) + ", c12 = " + std::to_string(frame->c_at(0, 1)) +
                          ", c13 = " + std::to_string(frame->c_at(0, 2)) + ", c23 = " +
                          std::to_string(frame->c_at(1, 2)) + ", 0F = " + std::to_string(frame->zero_f) +
                          ", 1F = " + std::to_string(frame->one_f));
        }));
        report.checks.push_back(run_check(prefix + "rcsub-not-ranked", [&] {
            return rcsub_is_ranked(cache.get(nl)) ? failed("RCSub is ranked") : passed("RCSub is not ranked");
        }));
        report.checks.push_back(run_check(prefix + "unequal-maximal-chains", [&] {
            if (!frame)
                return failed("needs a 3-frame");
            const auto& family = cache.get(nl);
            const std::size_t n = L.size();
            std::vector<ElementId> frame_elements = frame->a;
            for (int i = 0; i < frame->order; ++i)
                for (int j = i + 1; j < frame->order; ++j)
                    frame_elements.push_back(frame->c_at(i, j));
            const ElementSet z2 = rc_closure(L, sublattice_closure(L, ElementSet(n, frame_elements)));
            if (z2 != interval(L, frame->zero_f, frame->one_f))
                return failed("closure of the frame is " + z2.to_string() + ", not the interval [0F, 1F]");

            std::vector<FamilyIndex> zchain{family.empty_index()};
            for (const ElementSet& z : {ElementSet(n, {frame->zero_f}), ElementSet(n, {frame->zero_f, frame->one_f}), z2}) {
                auto idx = family.index_of(z);
                if (!idx)
                    return failed(z.to_string() + " is not RC-closed");
                if (!covers_in_rcsub(family, zchain.back(), *idx))
                    return failed(family.at(zchain.back()).to_string() + " is not covered by " + z.to_string());
                zchain.push_back(*idx);
            }
            auto rest = shortest_upward_path(family, zchain.back());
            zchain.insert(zchain.end(), rest.begin() + 1, rest.end());
            const std::size_t short_len = zchain.size() - 1;
            const std::size_t long_len = longest_maximal_chain(family).size() - 1;
            std::string detail = "maximal chain through Z_-1 < Z_0 < Z_1 < Z_2 = [0F,1F] has length " +
                                 std::to_string(short_len) + "; longest maximal chain has length " +
                                 std::to_string(long_len) + " = 1 + len L";
            if (long_len != 1 + length(L))
                return failed(detail);
            return short_len < long_len ? passed(detail) : failed(detail);
        }));
    }
}

void run_lemma(const std::vector<NamedLattice>& corpus, FamilyCache& cache, const VerifyOptions& options,
               VerificationReport& report) {
    const std::size_t samples = options.samples ? options.samples : 200;
    Rng rng(options.seed);
    // Draw all samples up front so the stream does not depend on which
    // lattices overrun their budget.
    std::vector<std::vector<std::uint64_t>> seeds(corpus.size());
    for (std::size_t s = 0; s < samples; ++s)
        seeds[s % corpus.size()].push_back(rng());

    for (std::size_t li = 0; li < corpus.size(); ++li) {
        const auto& nl = corpus[li];
        const Lattice& L = nl.lattice;
        report.checks.push_back(run_check("lemma-rcgen/" + nl.name, [&] {
            if (seeds[li].empty())
                return skipped("no samples assigned");
            const auto& family = cache.get(nl);
            for (std::uint64_t seed : seeds[li]) {
                Rng local(seed);
                FamilyIndex yi = family.empty_index();
                while (yi == family.empty_index())
                    yi = uniform_below(local, family.size());
                const ElementSet& Y = family.at(yi);
                ElementSet X(L.size(), random_longest_chain(L, Y, local));
                X |= random_subset(Y, 4, local);
                X = sublattice_closure(L, X);
                if (subset_length(L, X) != subset_length(L, Y))
                    return failed("sample generator produced a short X for Y = " + Y.to_string());
                ElementSet generated = rc_closure(L, X);
                if (generated != Y)
                    return failed("seed " + std::to_string(seed) + ": Y = " + Y.to_string() + ", X = " +
                                  X.to_string() + ", closure = " + generated.to_string());
            }
            return passed(std::to_string(seeds[li].size()) + " samples");
        }));
        report.checks.push_back(run_check("full-chain/" + nl.name, [&] {
            Rng local(options.seed ^ (0x9e3779b97f4a7c15ull * (li + 1)));
            const ElementSet all = ElementSet::full(L.size());
            constexpr int chains = 8;
            for (int c = 0; c < chains; ++c) {
                ElementSet X(L.size(), random_longest_chain(L, all, local));
                if (rc_closure(L, X) != all)
                    return failed("maximal chain " + X.to_string() + " does not generate L");
            }
            return passed(std::to_string(chains) + " longest maximal chains generate L");
        }));
    }
}

void run_closure_axioms(const std::vector<NamedLattice>& corpus, const VerifyOptions& options,
                        VerificationReport& report) {
    const std::size_t samples = options.samples ? options.samples : 1000;
    Rng rng(options.seed);
    std::vector<std::vector<std::uint64_t>> seeds(corpus.size());
    for (std::size_t s = 0; s < samples; ++s)
        seeds[s % corpus.size()].push_back(rng());

    for (std::size_t li = 0; li < corpus.size(); ++li) {
        const auto& nl = corpus[li];
        const Lattice& L = nl.lattice;
        report.checks.push_back(run_check("closure-axioms/" + nl.name, [&] {
            if (seeds[li].empty())
                return skipped("no samples assigned");
            const ElementSet all = ElementSet::full(L.size());
            for (std::uint64_t seed : seeds[li]) {
                Rng local(seed);
                ElementSet X = random_subset(all, 2 + uniform_below(local, 6), local);
                ElementSet Y = X | random_subset(all, 2 + uniform_below(local, 6), local);
                ElementSet cx = rc_closure(L, X);
                ElementSet cy = rc_closure(L, Y);
                std::string where = "seed " + std::to_string(seed) + ", X = " + X.to_string();
                if (!X.is_subset_of(cx))
                    return failed(where + ": not extensive");
                if (!cx.is_subset_of(cy))
                    return failed(where + ", Y = " + Y.to_string() + ": not monotone");
                if (rc_closure(L, cx) != cx)
                    return failed(where + ": not idempotent");
                if (!is_rc_closed(L, cx))
                    return failed(where + ": closure is not RC-closed");
            }
            return passed(std::to_string(seeds[li].size()) + " samples");
        }));
    }
}

void run_huhn(const std::vector<NamedLattice>& corpus, VerificationReport& report) {
    for (const auto& nl : corpus) {
        const Lattice& L = nl.lattice;
        const bool modular = is_modular(L);
        for (int n : {1, 2}) {
            report.checks.push_back(run_check("huhn/" + nl.name + "/n=" + std::to_string(n), [&] {
                if (!modular)
                    return skipped("not modular");
                if (L.size() > 16)
                    return skipped("more than 16 elements");
                const bool distributive = is_n_distributive(L, n);
                auto frame = find_frame(L, n + 1);
                if (frame && !verify_frame(L, *frame))
                    return failed("search returned an invalid frame");
                std::string detail = std::to_string(n) + "-distributive " + bool_text(distributive) + ", " +
                                     std::to_string(n + 1) + "-frame " +
                                     (frame ? "found at a = " + ids_text(frame->a) : std::string("none"));
                return distributive == !frame ? passed(detail) : failed(detail);
            }));
        }
    }
}

void run_boolean_semimodular(const std::vector<NamedLattice>& corpus, FamilyCache& cache,
                             VerificationReport& report) {
    for (const auto& nl : corpus) {
        report.checks.push_back(run_check("boolean-semimodular/" + nl.name, [&] {
            const Lattice order = family_lattice(cache.get(nl));
            const bool b = is_boolean(order);
            const bool s = is_semimodular(order);
            const bool ls = is_lower_semimodular(order);
            std::string detail =
                "boolean " + bool_text(b) + ", semimodular " + bool_text(s) + ", lower semimodular " + bool_text(ls);
            return b == s && s == ls ? passed(detail) : failed(detail);
        }));
    }
}

} // namespace

std::vector<NamedLattice> seeded_downset_lattices(std::size_t count, std::uint64_t seed, std::size_t max_elements) {
    std::vector<NamedLattice> out;
    Rng rng(seed);
    while (out.size() < count) {
        const std::uint64_t poset_seed = rng();
        const std::size_t n = 3 + uniform_below(rng, 5);
        Lattice L = downset_lattice(random_poset(n, poset_seed));
        if (L.size() <= max_elements)
            out.push_back({"downset(n=" + std::to_string(n) + ",seed=" + std::to_string(poset_seed) + ")",
                           std::move(L)});
    }
    return out;
}

std::vector<NamedLattice> zoo_corpus(std::uint64_t seed) {
    std::vector<NamedLattice> zoo;
    for (int k = 0; k <= 5; ++k)
        zoo.push_back({"chain(" + std::to_string(k) + ")", chain(k)});
    for (int k = 1; k <= 4; ++k)
        zoo.push_back({"boolean(" + std::to_string(k) + ")", boolean(k)});
    zoo.push_back({"M3", m_diamond(3)});
    zoo.push_back({"M4", m_diamond(4)});
    zoo.push_back({"N5", n5()});
    zoo.push_back({"fano", fano_subspace_lattice()});
    for (auto& nl : seeded_downset_lattices(20, seed))
        zoo.push_back(std::move(nl));
    return zoo;
}

std::vector<NamedLattice> poset_downset_corpus() {
    std::vector<NamedLattice> out;
    for (std::size_t n = 0; n <= 4; ++n) {
        auto posets = all_posets(n);
        for (std::size_t i = 0; i < posets.size(); ++i)
            out.push_back({"poset(n=" + std::to_string(n) + ",#" + std::to_string(i) + ")",
                           downset_lattice(posets[i])});
    }
    return out;
}

std::vector<NamedLattice> load_corpus(std::string_view source, std::uint64_t seed) {
    if (source == "zoo")
        return zoo_corpus(seed);
    if (source == "posets4")
        return poset_downset_corpus();
    if (source == "fano") {
        std::vector<NamedLattice> out;
        out.push_back({"fano", fano_subspace_lattice()});
        return out;
    }
    std::ifstream in{std::string(source)};
    if (!in)
        throw std::invalid_argument("cannot open lattice file '" + std::string(source) + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::vector<NamedLattice> out;
    out.push_back({std::string(source), parse_lattice(buffer.str())});
    return out;
}

std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::overbudget:
        return "overbudget";
    case CheckStatus::skipped:
        return "skipped";
    }
    return "unknown";
}

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    s.total = checks.size();
    for (const auto& c : checks) {
        switch (c.status) {
        case CheckStatus::pass:
            ++s.passed;
            break;
        case CheckStatus::fail:
            ++s.failed;
            break;
        case CheckStatus::overbudget:
            ++s.overbudget;
            break;
        case CheckStatus::skipped:
            ++s.skipped;
            break;
        }
    }
    return s;
}

bool VerificationReport::all_passed() const {
    auto s = summary();
    return s.failed == 0 && s.overbudget == 0;
}

std::string VerificationReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["lattice_name"] = lattice_name;
    j["seed"] = seed;
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json entry;
        entry["id"] = c.id;
        entry["status"] = std::string(to_string(c.status));
        entry["detail"] = c.detail;
        if (include_timing)
            entry["elapsed_ms"] = c.elapsed_ms;
        arr.push_back(std::move(entry));
    }
    auto s = summary();
    j["summary"] = {{"total", s.total},
                    {"pass", s.passed},
                    {"fail", s.failed},
                    {"overbudget", s.overbudget},
                    {"skipped", s.skipped}};
    return j.dump(2) + "\n";
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites{Suite::thm1,           Suite::thm3,           Suite::thm2_contrapositive,
                                           Suite::lemma_rcgen,    Suite::closure_axioms, Suite::huhn_frames,
                                           Suite::boolean_semimodular};
    return suites;
}

std::string_view to_string(Suite s) {
    switch (s) {
    case Suite::thm1:
        return "thm1";
    case Suite::thm3:
        return "thm3";
    case Suite::thm2_contrapositive:
        return "thm2-contrapositive";
    case Suite::lemma_rcgen:
        return "lemma-rcgen";
    case Suite::closure_axioms:
        return "closure-axioms";
    case Suite::huhn_frames:
        return "huhn-frames";
    case Suite::boolean_semimodular:
        return "boolean-semimodular";
    }
    return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : all_suites())
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

std::string_view default_corpus(Suite s) {
    switch (s) {
    case Suite::thm2_contrapositive:
        return "fano";
    case Suite::thm3:
        return "posets4";
    default:
        return "zoo";
    }
}

VerificationReport verify(Suite suite, std::string corpus_name, const std::vector<NamedLattice>& corpus,
                          const VerifyOptions& options) {
    VerificationReport report;
    report.suite = std::string(to_string(suite));
    report.lattice_name = std::move(corpus_name);
    report.seed = options.seed;
    if (corpus.empty())
        return report;

    FamilyCache cache(options.budget);
    switch (suite) {
    case Suite::thm1:
        run_thm1(corpus, cache, report);
        break;
    case Suite::thm3:
        run_thm3(corpus, cache, report);
        break;
    case Suite::thm2_contrapositive:
        run_thm2(corpus, cache, report);
        break;
    case Suite::lemma_rcgen:
        run_lemma(corpus, cache, options, report);
        break;
    case Suite::closure_axioms:
        run_closure_axioms(corpus, options, report);
        break;
    case Suite::huhn_frames:
        run_huhn(corpus, report);
        break;
    case Suite::boolean_semimodular:
        run_boolean_semimodular(corpus, cache, report);
        break;
    }

    std::unordered_set<std::string> ids;
    for (const auto& c : report.checks)
        if (!ids.insert(c.id).second)
            throw std::logic_error("duplicate check id " + c.id);
    return report;
}

std::uint64_t count_rcsub(int k) {
    if (k < 0)
        throw std::invalid_argument("boolean order must be non-negative");
    if (k > kMaxCountedBoolean)
        throw Overbudget("count --boolean is limited to k <= " + std::to_string(kMaxCountedBoolean) +
                         ": larger counts (such as B_57) need a closed-form formula that is not implemented here, "
                         "and enumeration does not scale that far");
    EnumerationBudget budget;
    budget.max_elements = std::size_t{1} << kMaxCountedBoolean;
    return enumerate_rcsub(boolean(k), budget).size();
}

} // namespace rcsub
