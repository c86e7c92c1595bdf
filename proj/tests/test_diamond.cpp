#include <random>
#include <set>

#include "doctest.h"
#include "sbraid/diamond.hpp"
#include "sbraid/experiments.hpp"

using namespace sbraid;
using namespace sbraid::diamond;
using rewrite::Budget;
using rewrite::Status;

namespace {

BraidWord W(const char* text, int n) { return parse_word(text, n); }

Move erase_at(std::size_t pos, int index, PairOrder order) {
  return Move{Direction::erase, pos, index, order, {}, {}};
}
Move insert_at(std::size_t pos, int index, PairOrder order) {
  return Move{Direction::insert, pos, index, order, {}, {}};
}

std::set<std::pair<int, int>> point_pairs(const PairSearch& s) {
  std::set<std::pair<int, int>> out;
  for (const auto& site : s.sites) out.insert(std::minmax(site.points.first, site.points.second));
  return out;
}

}  // namespace

TEST_CASE("moves") {
  const rewrite::RelationSystem m(Calculus::M, 3);
  auto w = W("s1 s2", 3);
  auto up = insert_at(1, 2, PairOrder::upsilon_tau);
  auto beta = apply_move(w, up, m);
  CHECK(beta == W("s1 u2 t2 s2", 3));
  CHECK(apply_move(beta, inverse(up), m) == w);
  CHECK_THROWS_AS(apply_move(W("s1 t1", 3), erase_at(0, 1, PairOrder::tau_upsilon), m),
                  InputError);
  CHECK_THROWS_AS(apply_move(W("t1 u1", 3), erase_at(0, 1, PairOrder::upsilon_tau), m),
                  InputError);
}

TEST_CASE("find_opposite_pairs") {
  Budget b;
  auto direct = find_opposite_pairs(W("t1 u1", 2), b);
  REQUIRE_FALSE(direct.sites.empty());
  CHECK(direct.sites.front().representative == W("t1 u1", 2));
  CHECK(direct.sites.front().position == 0);
  CHECK(direct.sites.front().pre_chain.empty());
  CHECK(point_pairs(direct) == std::set<std::pair<int, int>>{{0, 1}});

  CHECK(find_opposite_pairs(W("t1 s2 t1 t2", 3), b).sites.empty());
  CHECK(find_opposite_pairs(BraidWord(3), b).sites.empty());

  auto hidden = find_opposite_pairs(W("t1 s1 u1", 2), b);
  CHECK(point_pairs(hidden) == std::set<std::pair<int, int>>{{0, 2}});
  const rewrite::RelationSystem m(Calculus::M, 2);
  bool found = false;
  for (const auto& site : hidden.sites) {
    CHECK(rewrite::replay(W("t1 s1 u1", 2), site.pre_chain, m) == site.representative);
    CHECK(apply_move(W("t1 s1 u1", 2), site.erase_move(), m) == site.erased());
    found = found || site.representative == W("t1 u1 s1", 2);
  }
  CHECK(found);
}

TEST_CASE("reduce_irreducible examples") {
  Budget b;
  auto r = reduce_irreducible(W("t1 u1", 2), b);
  CHECK(r.result == BraidWord(2));
  CHECK(r.moves.size() == 1);

  r = reduce_irreducible(W("s1 t1 s2", 3), b);
  CHECK(r.result == W("s1 t1 s2", 3));
  CHECK(r.moves.empty());

  r = reduce_irreducible(W("u1 s1 t1", 2), b);
  CHECK(r.result == W("s1", 2));
  CHECK(r.moves.size() == 1);
  CHECK_FALSE(r.truncated);
}

TEST_CASE("reduction replays and is bounded") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 3; ++n) {
    const rewrite::RelationSystem m(Calculus::M, n);
    const auto words = experiments::enumerate_words(Calculus::M, n, n == 2 ? 5 : 4);
    for (int k = 0; k < 400; ++k) {
      const auto& w = words[rng() % words.size()];
      for (auto s : {Strategy::deterministic(), Strategy::randomized(rng())}) {
        auto r = reduce_irreducible(w, Budget{}, s);
        REQUIRE(r.moves.size() <= std::min(w.black_count(), w.white_count()));
        REQUIRE(r.result.singular_count() + 2 * r.moves.size() == w.singular_count());
        BraidWord cur = w;
        for (const auto& mv : r.moves) cur = apply_move(cur, mv, m);
        REQUIRE(cur == r.result);
        if (!r.truncated) REQUIRE(find_opposite_pairs(r.result, Budget{}).sites.empty());
      }
    }
  }
}

TEST_CASE("irreducible forms agree across strategies (n = 2 exhaustive)") {
  const auto words = experiments::enumerate_words(Calculus::M, 2, 5);
  MEquality m(2, Budget{});
  for (const auto& w : words) {
    auto a = reduce_irreducible(w, Budget{}, Strategy::deterministic());
    auto b = reduce_irreducible(w, Budget{}, Strategy::randomized(w.size() * 7 + 1));
    REQUIRE(m.equal(a.result, b.result).status == Status::equal);
  }
}

TEST_CASE("diamond case a: same pair") {
  auto beta = W("t1 u1", 2);
  auto alpha = W("s1 S1", 2);
  auto res = diamond_check(alpha, beta, alpha, insert_at(0, 1, PairOrder::tau_upsilon),
                           erase_at(0, 1, PairOrder::tau_upsilon), Budget{});
  CHECK(res.peak_case == PeakCase::same_pair);
  CHECK(res.outcome == Outcome::m_equal);
  REQUIRE(res.equality_witness);
}

TEST_CASE("diamond case b: disjoint pairs") {
  auto beta = W("t1 u1 t2 u2", 3);
  auto alpha = W("s1 S1 t2 u2", 3);
  auto gamma = W("t1 u1 s2 S2", 3);
  auto res = diamond_check(alpha, beta, gamma, insert_at(0, 1, PairOrder::tau_upsilon),
                           erase_at(2, 2, PairOrder::tau_upsilon), Budget{});
  CHECK(res.peak_case == PeakCase::disjoint);
  REQUIRE(res.outcome == Outcome::valley);
  const rewrite::RelationSystem m(Calculus::M, 3);
  MEquality eq(3, Budget{});
  CHECK(apply_move(alpha, *res.alpha_to_eta, m) == *res.eta);
  CHECK(apply_move(gamma, *res.gamma_to_eta, m) == *res.eta);
  CHECK(eq.equal(*res.eta, W("s1 S1 s2 S2", 3)).status == Status::equal);
}

TEST_CASE("diamond case c: shared point") {
  auto beta = W("t1 u1 t1", 2);
  auto alpha = W("s1 S1 t1", 2);
  auto gamma = W("t1 s1 S1", 2);
  auto res = diamond_check(alpha, beta, gamma, insert_at(0, 1, PairOrder::tau_upsilon),
                           erase_at(1, 1, PairOrder::upsilon_tau), Budget{});
  CHECK(res.peak_case == PeakCase::shared_point);
  CHECK(res.outcome == Outcome::m_equal);
  const rewrite::RelationSystem m(Calculus::M, 2);
  CHECK(rewrite::replay(alpha, *res.equality_witness, m) == gamma);
}

TEST_CASE("diamond rejects bad certificates") {
  auto beta = W("t1 u1 t1", 2);
  CHECK_THROWS_AS(diamond_check(W("t1", 2), beta, W("u1", 2),
                                insert_at(0, 1, PairOrder::tau_upsilon),
                                erase_at(1, 1, PairOrder::upsilon_tau), Budget{}),
                  InputError);
  CHECK_THROWS_AS(diamond_check(W("t1", 2), beta, W("t1", 2),
                                erase_at(0, 1, PairOrder::tau_upsilon),
                                erase_at(1, 1, PairOrder::upsilon_tau), Budget{}),
                  InputError);
  CHECK_THROWS_AS(diamond_check(W("t1", 2), beta, W("t1", 2),
                                insert_at(0, 1, PairOrder::tau_upsilon),
                                erase_at(2, 1, PairOrder::upsilon_tau), Budget{}),
                  InputError);
}

TEST_CASE("sg_equal examples") {
  CHECK(sg_equal(W("t1 u1 s2", 3), W("s2", 3), Budget{}).status == Status::equal);
  CHECK(sg_equal(W("t1", 2), W("u1", 2), Budget{}).status == Status::distinct);
  CHECK(sg_equal(BraidWord(2), BraidWord(2), Budget{}).status == Status::equal);
  CHECK(sg_equal(W("t1 u1", 2), BraidWord(2), Budget{}).status == Status::equal);
  CHECK_THROWS_AS(sg_equal(W("t1", 2), W("t1", 3), Budget{}), InputError);
}

TEST_CASE("SG witnesses replay") {
  std::mt19937_64 rng(37);
  for (int n = 2; n <= 3; ++n) {
    SgEquality sg(n, Budget{});
    const auto words = experiments::enumerate_words(Calculus::SG, n, 4);
    std::size_t equal = 0;
    for (int k = 0; k < 2000; ++k) {
      const auto& u = words[rng() % words.size()];
      const auto& v = words[rng() % words.size()];
      auto verdict = sg.equal(u, v);
      if (verdict.status != Status::equal) continue;
      ++equal;
      REQUIRE(verdict.witness);
      REQUIRE(rewrite::replay(u, *verdict.witness, sg.sg_system()) == v);
    }
    CHECK(equal > 0);
  }
}

TEST_CASE("black words are irreducible and SG equality restricts to M on them") {
  const auto words = experiments::enumerate_words(Calculus::SB, 3, 3);
  SgEquality sg(3, Budget{});
  MEquality m(3, Budget{});
  std::mt19937_64 rng(41);
  for (const auto& w : words) {
    CHECK(find_opposite_pairs(w, Budget{}).sites.empty());
    CHECK(sg.reduction(w).result == w);
    const auto& v = words[rng() % words.size()];
    REQUIRE(sg.equal(w, v).status == m.equal(w, v).status);
  }
}
