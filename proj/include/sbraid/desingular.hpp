#pragma once

#include <compare>
#include <map>
#include <string>

#include "sbraid/garside.hpp"
#include "sbraid/word.hpp"

namespace sbraid::desingular {

// A basis element of Z[B_n][x, y]: a monomial x^black y^white times a braid
// in normal form.
struct Term {
  int black = 0;
  int white = 0;
  garside::NormalForm braid;

  auto operator<=>(const Term&) const = default;
};

// Integer combination of Terms. Zero coefficients are never stored, so two
// sums are equal exactly when their term maps coincide.
class FormalSum {
 public:
  FormalSum() = default;
  static FormalSum single(Term term, long coeff = 1);
  static FormalSum one(int strands);

  const std::map<Term, long>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const Term& term, long coeff);

  FormalSum& operator+=(const FormalSum& other);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b);
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b);

  // Every term has the given bidegree.
  bool homogeneous(int black, int white) const;

  // "+1·D^1 - 1·D^-1", terms in key order; graded terms carry "x^k y^m·".
  std::string to_string() const;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  std::map<Term, long> terms_;
};

// sigma^{+-1} -> itself, tau_i -> sigma_i - sigma_i^-1. Throws InputError on
// white letters.
FormalSum eta(const BraidWord& w);

// Coloured variant: tau_i -> x(sigma_i - sigma_i^-1),
// upsilon_i -> y(sigma_i - sigma_i^-1).
FormalSum eta2(const BraidWord& w);

bool oracle_equal_SB(const BraidWord& u, const BraidWord& v);

}  // namespace sbraid::desingular
