#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sbraid/rewrite.hpp"
#include "sbraid/word.hpp"

namespace sbraid::diamond {

// Thrown when an exhaustive search contradicts the diamond lemma or the
// embedding theorem. Either outcome means the code is wrong.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Direction : std::uint8_t { insert, erase };
enum class PairOrder : std::uint8_t { tau_upsilon, upsilon_tau };

// An insertion or erasure of an adjacent opposite pair, performed on a
// representative of the source class.
//
// Applying a move to `source`: replay pre_chain (M relations) to reach the
// representative, insert or erase the pair at `position`, then replay
// post_chain (M relations) to reach the stated target.
struct Move {
  Direction direction = Direction::erase;
  std::size_t position = 0;
  int index = 1;
  PairOrder order = PairOrder::tau_upsilon;
  rewrite::Chain pre_chain;
  rewrite::Chain post_chain;
};

BraidWord apply_move(const BraidWord& source, const Move& move,
                     const rewrite::RelationSystem& m_system);

// The move that undoes `move` when applied to its target.
Move inverse(const Move& move);

struct PairSite {
  BraidWord representative;
  std::size_t position = 0;
  rewrite::Chain pre_chain;
  // Letter positions, in the searched word, of the two singular points that
  // form the pair.
  std::pair<int, int> points{-1, -1};

  Move erase_move() const;
  BraidWord erased() const;
};

struct PairSearch {
  std::vector<PairSite> sites;
  bool truncated = false;
  std::size_t nodes = 0;
};

// Every adjacent tau_i upsilon_i or upsilon_i tau_i factor over the
// representatives in the bounded M-closure of w, in BFS order, leftmost
// first within a representative.
PairSearch find_opposite_pairs(const BraidWord& w, const rewrite::Budget& budget);

struct Strategy {
  enum class Kind : std::uint8_t { deterministic, randomized } kind = Kind::deterministic;
  std::uint64_t seed = 0;

  static Strategy deterministic() { return {}; }
  static Strategy randomized(std::uint64_t seed) { return {Kind::randomized, seed}; }
};

struct ReductionTrace {
  BraidWord start;
  std::vector<Move> moves;
  BraidWord result;
  // Some pair search hit the node budget: the result is irreducible only at
  // this budget.
  bool truncated = false;
};

ReductionTrace reduce_irreducible(const BraidWord& w, const rewrite::Budget& budget,
                                  Strategy strategy = Strategy::deterministic());

// M-equality: invariant pre-filters, then the eta2 distinctness test, then
// bounded search. Caches closures, so keep one per worker.
class MEquality {
 public:
  MEquality(int strands, rewrite::Budget budget, bool use_eta2 = true);

  rewrite::Verdict equal(const BraidWord& u, const BraidWord& v);
  const rewrite::RelationSystem& system() const { return *system_; }
  const rewrite::Budget& budget() const { return budget_; }

 private:
  std::unique_ptr<rewrite::RelationSystem> system_;
  rewrite::Budget budget_;
  bool use_eta2_;
  rewrite::EquivalenceCache cache_;
};

// Equality in SG_n by reducing both words to irreducible form and comparing
// those in M. Witness chains are over the SG relation system.
class SgEquality {
 public:
  SgEquality(int strands, rewrite::Budget budget, bool use_eta2 = true);

  rewrite::Verdict equal(const BraidWord& u, const BraidWord& v);
  const ReductionTrace& reduction(const BraidWord& w);
  const rewrite::RelationSystem& sg_system() const { return sg_; }

 private:
  rewrite::Chain reduction_chain(const ReductionTrace& trace) const;

  rewrite::Budget budget_;
  rewrite::RelationSystem sg_;
  MEquality m_;
  std::unordered_map<std::string, ReductionTrace> reductions_;
};

rewrite::Verdict sg_equal(const BraidWord& u, const BraidWord& v,
                          const rewrite::Budget& budget);

enum class Outcome : std::uint8_t { m_equal, valley, failure };
std::string_view to_string(Outcome o);

// Relative position of the two erased pairs {p, q} and {r, s} in the peak.
enum class PeakCase : std::uint8_t { same_pair, disjoint, shared_point };
std::string_view to_string(PeakCase c);

struct DiamondResult {
  Outcome outcome = Outcome::failure;
  PeakCase peak_case = PeakCase::disjoint;
  std::optional<rewrite::Chain> equality_witness;
  std::optional<BraidWord> eta;
  std::optional<Move> alpha_to_eta;
  std::optional<Move> gamma_to_eta;
  std::string report;
};

// Close the peak alpha -> beta -> gamma given an insertion alpha_up from
// alpha and an erasure beta_down from beta: either alpha = gamma in M, or some
// eta is reached by an erasure from each side. Throws InputError on a bad
// certificate and TheoremViolation when every search completed without
// closing the peak.
DiamondResult diamond_check(const BraidWord& alpha, const BraidWord& beta,
                            const BraidWord& gamma, const Move& alpha_up,
                            const Move& beta_down,
                            const rewrite::Budget& budget,
                            MEquality* m_equality = nullptr);

}  // namespace sbraid::diamond
