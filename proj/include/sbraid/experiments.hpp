#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbraid/diamond.hpp"
#include "sbraid/rewrite.hpp"
#include "sbraid/word.hpp"

namespace sbraid::experiments {

// Letters legal in calc on n strands, in code order.
std::vector<Generator> alphabet(Calculus calc, int n);

// All words of length <= max_length, shortest first, then by letter code.
std::vector<BraidWord> enumerate_words(Calculus calc, int n, std::size_t max_length);

struct VerdictCounts {
  std::size_t equal = 0;
  std::size_t distinct = 0;
  std::size_t inconclusive = 0;
  std::map<std::string, std::size_t> by_method;

  void add(const rewrite::Verdict& v);
  void merge(const VerdictCounts& other);
  std::size_t total() const { return equal + distinct + inconclusive; }
};

struct PairSample {
  std::string u;
  std::string v;
  std::string verdict;
  std::string method;
  std::vector<std::string> witness;
};

struct RunInfo {
  int strands = 0;
  std::size_t max_length = 0;
  rewrite::Budget budget;
  int jobs = 1;
  std::uint64_t seed = 0;
  double wall_ms = 0;
};

struct InjectivityReport {
  RunInfo run;
  std::size_t words = 0;

  struct ClassRow {
    std::string representative;
    std::size_t size = 0;
    std::string eta;
    long exponent_sum = 0;
    std::size_t tau_count = 0;
  };
  std::vector<ClassRow> classes;

  std::size_t pairs = 0;
  VerdictCounts cross_class;  // SB-distinct pairs
  VerdictCounts same_class;   // SB-equal pairs
  std::vector<PairSample> violations;
  std::vector<PairSample> samples;

  // Two-strand closed form: SB_2 classes are indexed by (exponent sum,
  // tau count), SG_2 classes by (exponent sum, black minus white).
  struct ClosedForm {
    bool sb_index_matches = false;
    std::size_t sg_words = 0;
    std::size_t sg_pairs = 0;
    std::size_t sg_mismatches = 0;
    std::size_t sg_inconclusive = 0;
    std::size_t sg_classes = 0;
  };
  std::optional<ClosedForm> closed_form;
};

struct DiamondReport {
  RunInfo run;
  std::size_t peaks_words = 0;
  std::size_t peaks = 0;
  // [case][outcome] -> count
  std::map<std::string, std::map<std::string, std::size_t>> table;
  std::size_t failures = 0;
  std::size_t aborts = 0;
  std::size_t certificate_errors = 0;
  std::vector<std::string> abort_messages;
  std::vector<std::map<std::string, std::string>> samples;
};

struct ConfluenceReport {
  RunInfo run;
  std::size_t words = 0;
  std::size_t equal = 0;
  std::size_t confirmed_divergences = 0;
  std::size_t unconfirmed = 0;
  std::size_t truncated = 0;
  std::size_t deletions = 0;
  std::size_t bound_violations = 0;
  std::map<std::string, std::size_t> by_method;
  std::vector<std::map<std::string, std::string>> divergences;
};

struct ResolutionReport {
  RunInfo run;
  std::size_t pairs = 0;
  std::size_t passed = 0;
  std::size_t chain_steps = 0;
  std::map<std::string, std::size_t> step_kinds;
  std::size_t search_confirmations = 0;
  std::vector<std::string> failures;
};

// Partition SB words of length <= L by the desingularization oracle, then
// confirm no SB-distinct pair is SG-equal. Throws TheoremViolation on a
// violation when abort_on_violation is set.
InjectivityReport injectivity_experiment(int n, std::size_t max_length,
                                         const rewrite::Budget& budget, int jobs,
                                         bool abort_on_violation = true);

// Every peak alpha <- beta -> gamma of certified erasures, for all M words
// beta of length <= L.
DiamondReport diamond_experiment(int n, std::size_t max_length,
                                 const rewrite::Budget& budget, int jobs);

// Reductions of `count` random SG-alphabet words under the deterministic and
// a seeded randomized strategy, compared in M.
ConfluenceReport confluence_experiment(int n, std::size_t max_length,
                                       std::size_t count, std::uint64_t seed,
                                       const rewrite::Budget& budget, int jobs);

// Random M-equal pairs (w, w') joined by a recorded chain; resolving the same
// singular point in both gives M-equal words.
ResolutionReport resolution_experiment(int n, std::size_t max_length, std::size_t count,
                               std::uint64_t seed, const rewrite::Budget& budget,
                               int jobs);

std::string to_json(const InjectivityReport& r, bool timing);
std::string to_json(const DiamondReport& r, bool timing);
std::string to_json(const ConfluenceReport& r, bool timing);
std::string to_json(const ResolutionReport& r, bool timing);

std::string to_csv(const InjectivityReport& r);
std::string to_csv(const DiamondReport& r);
std::string to_csv(const ConfluenceReport& r);

}  // namespace sbraid::experiments
