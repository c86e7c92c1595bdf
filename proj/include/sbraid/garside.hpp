#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sbraid/word.hpp"

namespace sbraid::garside {

// A positive braid in which every pair of strands crosses at most once,
// identified with its underlying permutation.
class PermutationBraid {
 public:
  explicit PermutationBraid(Permutation perm) : perm_(std::move(perm)) {}

  static PermutationBraid identity(int n) { return PermutationBraid(Permutation(n)); }
  static PermutationBraid delta(int n) { return PermutationBraid(Permutation::reversal(n)); }
  static PermutationBraid generator(int n, int index);

  const Permutation& permutation() const { return perm_; }
  int strands() const { return perm_.size(); }
  int length() const { return perm_.inversions(); }
  bool is_identity() const { return perm_.is_identity(); }
  bool is_delta() const;

  // Starting set: generators s_i (0-based i) with this = s_i * X, X simple.
  std::vector<bool> starting_set() const;
  // Finishing set: generators s_i with this = X * s_i.
  std::vector<bool> finishing_set() const;

  // Conjugation by the half twist: sigma_i -> sigma_{n-i}.
  PermutationBraid flipped() const;

  // A reduced positive word spelling this element.
  BraidWord to_word() const;

  auto operator<=>(const PermutationBraid&) const = default;

 private:
  Permutation perm_;
};

// Delta^infimum * factors[0] * ... * factors[k-1], with every factor a proper
// simple element (neither identity nor Delta) and each adjacent pair
// left-weighted.
struct NormalForm {
  int strands = 1;
  long infimum = 0;
  std::vector<PermutationBraid> factors;

  long supremum() const { return infimum + static_cast<long>(factors.size()); }

  // "D^k | f1 | f2 | ..." with each factor in one-line notation.
  std::string to_string() const;
  BraidWord to_word() const;

  auto operator<=>(const NormalForm&) const = default;
};

// True when S(b) is contained in F(a).
bool left_weighted(const PermutationBraid& a, const PermutationBraid& b);

// Throws InputError when w contains a singular letter.
NormalForm normal_form(const BraidWord& w);

// Product of two normal forms, renormalized.
NormalForm multiply(const NormalForm& a, const NormalForm& b);

bool equal_B(const BraidWord& u, const BraidWord& v);

// Word for Delta^k on n strands (k may be negative).
BraidWord delta_power(int n, long k);

}  // namespace sbraid::garside
