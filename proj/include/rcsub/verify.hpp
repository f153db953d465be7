#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcsub/lattice.hpp"
#include "rcsub/rc_closure.hpp"

namespace rcsub {

struct NamedLattice {
    std::string name;
    Lattice lattice;
};

inline constexpr std::uint64_t kDefaultSeed = 1;

// Random downset lattices with at most `max_elements` elements, drawn from
// posets on 3..7 points. The same seed always yields the same list.
std::vector<NamedLattice> seeded_downset_lattices(std::size_t count, std::uint64_t seed,
                                                  std::size_t max_elements = 16);

// chain(0..5), boolean(1..4), M3, M4, N5, fano and 20 seeded downset lattices.
std::vector<NamedLattice> zoo_corpus(std::uint64_t seed = kDefaultSeed);

// Downset lattices of every labeled poset on 0..4 points (243 lattices).
std::vector<NamedLattice> poset_downset_corpus();

// "zoo", "posets4", "fano", or the path of a lattice file.
std::vector<NamedLattice> load_corpus(std::string_view source, std::uint64_t seed = kDefaultSeed);

enum class CheckStatus { pass, fail, overbudget, skipped };

std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    double elapsed_ms = 0;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t overbudget = 0;
    std::size_t skipped = 0;
};

struct VerificationReport {
    std::string suite;
    std::string lattice_name;
    std::uint64_t seed = kDefaultSeed;
    std::vector<CheckResult> checks;

    ReportSummary summary() const;
    // No failures and no overbudget checks; skipped checks are neutral.
    bool all_passed() const;
    // JSON with a fixed key order; elapsed_ms is the only field that varies
    // between runs and is left out when include_timing is false.
    std::string to_json(bool include_timing = true) const;
};

enum class Suite { thm1, thm3, thm2_contrapositive, lemma_rcgen, closure_axioms, huhn_frames, boolean_semimodular };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite s);
const std::vector<Suite>& all_suites();

// The corpus a suite runs on when none is given: fano for thm2-contrapositive,
// posets4 for thm3, zoo for the rest.
std::string_view default_corpus(Suite s);

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    // Total random samples for lemma-rcgen and closure-axioms; 0 selects the
    // suite default (200 and 1000).
    std::size_t samples = 0;
    EnumerationBudget budget;
};

/// Runs one suite over a corpus. Budget overruns are reported per check and
/// never abort the run.
VerificationReport verify(Suite suite, std::string corpus_name, const std::vector<NamedLattice>& corpus,
                          const VerifyOptions& options = {});

inline constexpr int kMaxCountedBoolean = 5;

/// |RCSub(B_k)| by enumeration. Throws Overbudget for k > 5: larger values need
/// a closed-form formula that is not implemented here.
std::uint64_t count_rcsub(int k);

} // namespace rcsub
