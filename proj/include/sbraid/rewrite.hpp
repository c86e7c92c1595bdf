#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sbraid/word.hpp"

namespace sbraid::rewrite {

enum class Family : std::uint8_t { R1 = 1, R2, R3, R4, R5, R6, R7, R8 };

std::string_view to_string(Family f);

// One concrete instance of a defining relation, left = right.
//
// singular_map pairs the offset of each singular letter in `left` with the
// offset of the same singular point in `right`; it lets callers follow a
// singular point through a rewrite chain.
struct RewriteRule {
  Family family;
  std::string left;   // packed letter codes
  std::string right;  // packed letter codes
  std::vector<std::pair<std::uint8_t, std::uint8_t>> singular_map;

  bool length_preserving() const { return left.size() == right.size(); }
};

// A rule used in one direction: forward rewrites left -> right.
struct Step {
  std::uint32_t rule = 0;
  bool forward = true;
  std::size_t position = 0;

  Step reversed() const { return Step{rule, !forward, position}; }
  friend bool operator==(const Step&, const Step&) = default;
};

using Chain = std::vector<Step>;

// The defining relations of B_n, SB_n, M or SG_n as concrete rule instances.
//
// Besides the literal presentation, the classical families carry their
// mixed-sign variants (sigma_i^-1 sigma_j = sigma_j sigma_i^-1, the
// conjugated braid relations, ...). All are consequences of R1-R7 and keep
// bounded searches from needing long detours through inserted
// sigma sigma^-1 pairs.
class RelationSystem {
 public:
  RelationSystem(Calculus calc, int strands);

  Calculus calculus() const { return calc_; }
  int strands() const { return strands_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const RewriteRule& rule(std::uint32_t id) const { return rules_[id]; }

  const std::string& from(const Step& s) const {
    return s.forward ? rules_[s.rule].left : rules_[s.rule].right;
  }
  const std::string& to(const Step& s) const {
    return s.forward ? rules_[s.rule].right : rules_[s.rule].left;
  }

  // Oriented rules whose source side starts with the given letter code,
  // merged with the insertion rules, in (rule id, direction) order.
  const std::vector<Step>& candidates(std::uint8_t first) const {
    return by_first_[first];
  }
  const std::vector<Step>& insertions() const { return insertions_; }

  // Human-readable name of an oriented rule instance: "R6 s1 t1 -> t1 s1".
  std::string describe(const Step& s) const;

  // One rule per line: "R6: s1 t1 = t1 s1".
  std::string to_rules_text() const;

 private:
  void add(Family f, std::vector<Generator> left, std::vector<Generator> right);
  void index();

  Calculus calc_;
  int strands_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<Step>> by_first_;
  std::vector<Step> insertions_;
};

// Parses the rules text back into (family, left, right) triples.
struct RuleLine {
  Family family;
  BraidWord left;
  BraidWord right;
};
std::vector<RuleLine> parse_rules_text(std::string_view text, int strands);

struct Application {
  Step step;
  BraidWord result;
};

// Every one-step rewrite of w, ordered by (position, rule id, direction).
// Throws InputError if w is not over the system's alphabet.
std::vector<Application> applicable_moves(const BraidWord& w,
                                          const RelationSystem& sys);

// Applies one step; throws InputError if the source side does not match.
BraidWord apply(const BraidWord& w, const Step& s, const RelationSystem& sys);
BraidWord replay(const BraidWord& w, const Chain& chain,
                 const RelationSystem& sys);
Chain reversed(const Chain& chain);

// Follows letter positions through one step. ids has one entry per letter
// of the current word; singular letters keep their id, letters created by
// the step get -1.
std::vector<int> track(const std::vector<int>& ids, const Step& s,
                       const RelationSystem& sys);

struct Budget {
  std::size_t max_nodes = 200000;
  std::size_t length_slack = 2;
  // Overrides (longest operand + length_slack) when set.
  std::optional<std::size_t> max_length;
  bool length_preserving_only = false;
  // Allow invariant pre-filters to return `distinct` without a search.
  bool use_invariants = true;

  std::size_t cap_for(std::size_t longest) const {
    return max_length.value_or(longest + length_slack);
  }
};

// Breadth-first closure. Words are stored as packed keys in discovery order;
// parent/via give a spanning tree rooted at index 0.
struct Closure {
  int strands = 1;
  std::size_t max_length = 0;
  std::vector<std::string> words;
  std::vector<std::int64_t> parent;
  std::vector<Step> via;
  std::unordered_map<std::string, std::size_t> index;
  bool truncated = false;

  bool contains(const std::string& key) const { return index.count(key) != 0; }
  // Chain from the root to words[i].
  Chain chain_to(std::size_t i) const;
  std::vector<BraidWord> members() const;
};

Closure closure(const BraidWord& u, const RelationSystem& sys,
                const Budget& budget);

enum class Status : std::uint8_t { equal, distinct, inconclusive };
std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::inconclusive;
  std::optional<Chain> witness;
  // "closure", "identical", or "invariant:<name>".
  std::string method;
  std::size_t nodes = 0;
  std::size_t max_length = 0;
  std::size_t max_nodes = 0;
};

// Name of the first invariant that separates u and v in calc, if any.
// Permutation always; colour counts in SB/M; black minus white in SG;
// crossing exponent sum in every calculus (R8 erases singular letters only).
std::optional<std::string> separating_invariant(const BraidWord& u,
                                                const BraidWord& v,
                                                Calculus calc);

Verdict bfs_equal(const BraidWord& u, const BraidWord& v,
                  const RelationSystem& sys, const Budget& budget);

// Memoizes closures per length cap. The rules are symmetric, so a complete
// closure is a connected component and serves every word inside it. Verdicts
// match bfs_equal under the same budget. Not thread-safe; use one per worker.
class EquivalenceCache {
 public:
  EquivalenceCache(const RelationSystem& sys, Budget budget);

  Verdict equal(const BraidWord& u, const BraidWord& v);
  const RelationSystem& system() const { return *sys_; }
  const Budget& budget() const { return budget_; }

 private:
  struct Component {
    Closure closure;
  };
  const Component* component_of(const BraidWord& u, std::size_t cap);

  const RelationSystem* sys_;
  Budget budget_;
  std::vector<Component> components_;
  std::unordered_map<std::size_t,
                     std::unordered_map<std::string, std::size_t>> member_of_;
};

}  // namespace sbraid::rewrite
