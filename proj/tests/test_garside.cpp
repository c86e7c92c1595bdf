#include <map>
#include <random>

#include "burau.hpp"
#include "doctest.h"
#include "sbraid/experiments.hpp"
#include "sbraid/garside.hpp"

using namespace sbraid;
using garside::NormalForm;
using garside::normal_form;

using burau::Matrix;

namespace {

BraidWord W(const char* text, int n) { return parse_word(text, n); }

// Crossing of positions i, i+1 at the top of a simple braid.
bool starts_with(const Permutation& p, int i) { return p.at(i) > p.at(i + 1); }
bool ends_with(const Permutation& p, int i) {
  auto inv = p.inverse();
  return inv.at(i) > inv.at(i + 1);
}

}  // namespace

TEST_CASE("normal form examples") {
  CHECK(normal_form(BraidWord(3)) == NormalForm{3, 0, {}});
  CHECK(normal_form(BraidWord(3)).to_string() == "D^0");
  CHECK(normal_form(W("s1 s2 s1", 3)) == normal_form(W("s2 s1 s2", 3)));
  CHECK(normal_form(W("s1 s2 s1", 3)).to_string() == "D^1");
  auto inv = normal_form(W("S1", 2));
  CHECK(inv.infimum == -1);
  CHECK(inv.factors.empty());
  CHECK(normal_form(W("s1 s2", 3)).to_string() == "D^0 | 3,1,2");
  CHECK(normal_form(W("S1", 3)).to_string() == "D^-1 | 3,1,2");
  CHECK_THROWS_AS(normal_form(W("t1", 2)), InputError);
}

TEST_CASE("equal_B examples") {
  CHECK(garside::equal_B(W("s1 S1", 2), BraidWord(2)));
  CHECK_FALSE(garside::equal_B(W("s1 s2", 3), W("s2 s1", 3)));
  CHECK(garside::equal_B(W("s1 s2 s1 s2 s1 s2", 3), garside::delta_power(3, 2)));
  CHECK(garside::equal_B(W("s1 s2 s1 s1 s2 s1", 3), W("s1 s2 s1 s2 s1 s2", 3)));
  CHECK(garside::equal_B(concat(garside::delta_power(4, -1), garside::delta_power(4, 1)),
                         BraidWord(4)));
}

TEST_CASE("normal form agrees with the Burau oracle on B_3") {
  const auto words = experiments::enumerate_words(Calculus::B, 3, 6);
  std::map<Matrix, NormalForm> by_matrix;
  std::map<NormalForm, Matrix> by_form;
  for (const auto& w : words) {
    auto nf = normal_form(w);
    auto m = burau::image(w);
    auto [a, fresh_a] = by_matrix.emplace(m, nf);
    auto [b, fresh_b] = by_form.emplace(nf, m);
    REQUIRE(a->second == nf);
    REQUIRE(b->second == m);
  }
  CHECK(by_matrix.size() == by_form.size());
  CHECK(by_form.size() > 100);
}

TEST_CASE("equal normal forms have equal Burau images on B_4") {
  const auto words = experiments::enumerate_words(Calculus::B, 4, 4);
  std::map<NormalForm, Matrix> by_form;
  for (const auto& w : words) {
    auto [it, fresh] = by_form.emplace(normal_form(w), burau::image(w));
    if (!fresh) REQUIRE(it->second == burau::image(w));
  }
}

TEST_CASE("normal form structure") {
  for (int n = 2; n <= 5; ++n) {
    const auto words = experiments::enumerate_words(Calculus::B, n, n <= 3 ? 6 : 4);
    const long delta_len = n * (n - 1) / 2;
    for (const auto& w : words) {
      auto nf = normal_form(w);
      long factor_len = 0;
      for (std::size_t k = 0; k < nf.factors.size(); ++k) {
        const auto& f = nf.factors[k].permutation();
        REQUIRE_FALSE(f.is_identity());
        REQUIRE(f != Permutation::reversal(n));
        factor_len += f.inversions();
        if (k + 1 < nf.factors.size()) {
          const auto& g = nf.factors[k + 1].permutation();
          for (int i = 0; i + 1 < n; ++i) {
            if (starts_with(g, i)) REQUIRE(ends_with(f, i));
          }
          REQUIRE(garside::left_weighted(nf.factors[k], nf.factors[k + 1]));
        }
      }
      // Exponent sum.
      REQUIRE(w.exponent_sum() == nf.infimum * delta_len + factor_len);
      // Fixpoint.
      REQUIRE(normal_form(nf.to_word()) == nf);
      // Permutation is an invariant.
      REQUIRE(underlying_permutation(nf.to_word()) == underlying_permutation(w));
    }
  }
}

TEST_CASE("normal form is a homomorphism") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 6; ++n) {
    const auto words = experiments::enumerate_words(Calculus::B, n, 3);
    for (int k = 0; k < 500; ++k) {
      const auto& u = words[rng() % words.size()];
      const auto& v = words[rng() % words.size()];
      REQUIRE(garside::multiply(normal_form(u), normal_form(v)) == normal_form(concat(u, v)));
    }
  }
}

TEST_CASE("delta power") {
  for (int n = 2; n <= 5; ++n) {
    for (long k = -2; k <= 2; ++k) {
      auto nf = normal_form(garside::delta_power(n, k));
      CHECK(nf.infimum == k);
      CHECK(nf.factors.empty());
    }
  }
}

TEST_CASE("simple elements") {
  auto d = garside::PermutationBraid::delta(4);
  CHECK(d.is_delta());
  CHECK(d.length() == 6);
  CHECK(garside::PermutationBraid::generator(4, 2).flipped() ==
        garside::PermutationBraid::generator(4, 2));
  CHECK(garside::PermutationBraid::generator(4, 1).flipped() ==
        garside::PermutationBraid::generator(4, 3));
  auto s1s2 = garside::PermutationBraid(underlying_permutation(W("s1 s2", 3)));
  CHECK(s1s2.starting_set() == std::vector<bool>{true, false});
  CHECK(s1s2.finishing_set() == std::vector<bool>{false, true});
  CHECK(garside::equal_B(s1s2.to_word(), W("s1 s2", 3)));
}
