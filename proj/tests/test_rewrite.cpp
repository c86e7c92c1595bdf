#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "sbraid/experiments.hpp"
#include "sbraid/garside.hpp"
#include "sbraid/rewrite.hpp"

using namespace sbraid;
using namespace sbraid::rewrite;

namespace {

BraidWord W(const char* text, int n) { return parse_word(text, n); }

bool has_move(const std::vector<Application>& moves, const RelationSystem& sys, Family f,
              std::size_t pos, const BraidWord& result) {
  return std::any_of(moves.begin(), moves.end(), [&](const Application& a) {
    return sys.rule(a.step.rule).family == f && a.step.position == pos && a.result == result;
  });
}

std::set<std::string> member_strings(const Closure& c) {
  std::set<std::string> out;
  for (const auto& w : c.members()) out.insert(w.to_string());
  return out;
}

}  // namespace

TEST_CASE("applicable moves") {
  const RelationSystem m(Calculus::M, 2);
  const RelationSystem sg(Calculus::SG, 2);
  CHECK(applicable_moves(BraidWord(2), RelationSystem(Calculus::B, 2)).size() ==
        RelationSystem(Calculus::B, 2).insertions().size());
  auto moves = applicable_moves(W("s1 t1", 2), m);
  CHECK(has_move(moves, m, Family::R6, 0, W("t1 s1", 2)));
  auto sg_moves = applicable_moves(W("t1 u1", 2), sg);
  CHECK(has_move(sg_moves, sg, Family::R8, 0, BraidWord(2)));
  CHECK_THROWS_AS(applicable_moves(W("u1", 2), RelationSystem(Calculus::SB, 2)), InputError);
  CHECK_THROWS_AS(applicable_moves(W("t1", 2), RelationSystem(Calculus::B, 2)), InputError);

  // Deterministic order.
  auto again = applicable_moves(W("s1 t1", 2), m);
  REQUIRE(again.size() == moves.size());
  for (std::size_t i = 0; i < moves.size(); ++i) CHECK(again[i].step == moves[i].step);
  for (std::size_t i = 1; i < moves.size(); ++i) {
    const auto& a = moves[i - 1].step;
    const auto& b = moves[i].step;
    CHECK(std::tuple(a.position, a.rule, !a.forward) <= std::tuple(b.position, b.rule, !b.forward));
  }
}

TEST_CASE("only insertions apply to the empty word") {
  for (auto calc : {Calculus::B, Calculus::SB, Calculus::M, Calculus::SG}) {
    const RelationSystem sys(calc, 3);
    for (const auto& a : applicable_moves(BraidWord(3), sys)) {
      const auto f = sys.rule(a.step.rule).family;
      CHECK((f == Family::R1 || (calc == Calculus::SG && f == Family::R8)));
      CHECK_FALSE(a.step.forward);
      CHECK(a.result.size() == 2);
    }
  }
}

TEST_CASE("rules hold in the permutation image and the exponent sum") {
  for (auto calc : {Calculus::B, Calculus::SB, Calculus::M, Calculus::SG}) {
    for (int n = 2; n <= 5; ++n) {
      const RelationSystem sys(calc, n);
      for (const auto& r : sys.rules()) {
        auto l = BraidWord::from_key(n, r.left);
        auto rt = BraidWord::from_key(n, r.right);
        CHECK(in_alphabet(l, calc));
        CHECK(in_alphabet(rt, calc));
        CHECK(underlying_permutation(l) == underlying_permutation(rt));
        CHECK(l.exponent_sum() == rt.exponent_sum());
        if (r.family != Family::R8) {
          CHECK(l.black_count() == rt.black_count());
          CHECK(l.white_count() == rt.white_count());
          CHECK(r.singular_map.size() == l.singular_count());
          for (auto [a, b] : r.singular_map) {
            CHECK(l[a].color() == rt[b].color());
          }
        } else {
          CHECK(static_cast<long>(l.black_count()) - static_cast<long>(l.white_count()) ==
                static_cast<long>(rt.black_count()) - static_cast<long>(rt.white_count()));
        }
        // Crossing-only rules are braid identities.
        if (in_alphabet(l, Calculus::B)) CHECK(garside::equal_B(l, rt));
      }
    }
  }
}

TEST_CASE("rule families present per calculus") {
  auto families = [](Calculus c, int n) {
    std::set<Family> out;
    const RelationSystem sys(c, n);
    for (const auto& r : sys.rules()) out.insert(r.family);
    return out;
  };
  CHECK(families(Calculus::B, 4) == std::set{Family::R1, Family::R2, Family::R3});
  CHECK(families(Calculus::B, 2) == std::set{Family::R1});
  CHECK(families(Calculus::SB, 4) == std::set{Family::R1, Family::R2, Family::R3, Family::R4,
                                           Family::R5, Family::R6, Family::R7});
  CHECK(families(Calculus::SG, 2) == std::set{Family::R1, Family::R6, Family::R8});
  // M and SG share rule ids; R8 comes last.
  const RelationSystem m(Calculus::M, 3), sg(Calculus::SG, 3);
  for (std::size_t i = 0; i < m.rules().size(); ++i) {
    CHECK(m.rules()[i].left == sg.rules()[i].left);
    CHECK(m.rules()[i].right == sg.rules()[i].right);
  }
  for (std::size_t i = m.rules().size(); i < sg.rules().size(); ++i) {
    CHECK(sg.rules()[i].family == Family::R8);
  }
}

TEST_CASE("closure examples") {
  const RelationSystem b(Calculus::B, 3);
  Budget lp;
  lp.max_length = 3;
  lp.length_preserving_only = true;
  CHECK(member_strings(closure(W("s1 s2 s1", 3), b, lp)) ==
        std::set<std::string>{"s1 s2 s1", "s2 s1 s2"});

  const RelationSystem sb(Calculus::SB, 3);
  Budget cap2;
  cap2.max_length = 2;
  CHECK(member_strings(closure(W("t1 t2", 3), sb, cap2)) == std::set<std::string>{"t1 t2"});
  auto moves = applicable_moves(W("t1 t2", 3), sb);
  for (const auto& a : moves) CHECK(a.result.size() > 2);

  Budget e2;
  e2.max_length = 2;
  auto empty = member_strings(closure(BraidWord(2), RelationSystem(Calculus::B, 2), e2));
  CHECK(empty == std::set<std::string>{"e", "s1 S1", "S1 s1"});
}

TEST_CASE("bfs_equal examples") {
  const RelationSystem m(Calculus::M, 2);
  auto v = bfs_equal(W("s1 t1", 2), W("t1 s1", 2), m, Budget{});
  CHECK(v.status == Status::equal);
  REQUIRE(v.witness);
  CHECK(v.witness->size() == 1);

  Budget cap4;
  cap4.max_length = 4;
  auto d = bfs_equal(W("t1 u1", 2), W("u1 t1", 2), m, cap4);
  CHECK(d.status == Status::distinct);
  CHECK(d.max_length == 4);
  cap4.use_invariants = false;
  d = bfs_equal(W("t1 u1", 2), W("u1 t1", 2), m, cap4);
  CHECK(d.status == Status::distinct);
  CHECK(d.method == "closure");

  const RelationSystem sg(Calculus::SG, 2);
  auto e = bfs_equal(W("t1 u1", 2), BraidWord(2), sg, Budget{});
  CHECK(e.status == Status::equal);
  CHECK(replay(W("t1 u1", 2), *e.witness, sg) == BraidWord(2));

  Budget tiny;
  tiny.max_nodes = 2;
  tiny.use_invariants = false;
  CHECK(bfs_equal(W("s1 S1 t1", 2), W("t1 s1 S1", 2), m, tiny).status == Status::inconclusive);
}

TEST_CASE("two-strand M closure is a commutation class") {
  // Independent oracle: in M_2 the only non-R1 relation is s1 t1 = t1 s1
  // and its colour twin, so equality is the crossing exponent sum together
  // with the sequence of singular letters.
  auto key = [](const BraidWord& w) {
    std::string seq;
    for (auto g : w.letters())
      if (g.is_singular()) seq += g.to_string();
    return std::pair{w.exponent_sum(), seq};
  };
  const RelationSystem m(Calculus::M, 2);
  const auto words = experiments::enumerate_words(Calculus::M, 2, 3);
  Budget b;
  b.use_invariants = false;
  EquivalenceCache cache(m, b);
  for (const auto& u : words) {
    for (const auto& v : words) {
      auto verdict = cache.equal(u, v);
      REQUIRE(verdict.status != Status::inconclusive);
      REQUIRE((verdict.status == Status::equal) == (key(u) == key(v)));
    }
  }
}

TEST_CASE("witnesses replay, are symmetric, and cache matches direct search") {
  std::mt19937_64 rng(11);
  for (auto calc : {Calculus::B, Calculus::SB, Calculus::M, Calculus::SG}) {
    const RelationSystem sys(calc, 3);
    const auto words = experiments::enumerate_words(calc, 3, 4);
    Budget budget;
    EquivalenceCache cache(sys, budget);
    std::size_t equal = 0;
    for (int k = 0; k < 400; ++k) {
      const auto& u = words[rng() % words.size()];
      // Half the time pick a random member of u's class.
      BraidWord v = words[rng() % words.size()];
      if (k % 2 == 0) {
        Budget small;
        small.max_length = u.size() + 1;
        auto c = closure(u, sys, small);
        v = BraidWord::from_key(3, c.words[rng() % c.words.size()]);
      }
      auto uv = bfs_equal(u, v, sys, budget);
      auto vu = bfs_equal(v, u, sys, budget);
      REQUIRE(uv.status == vu.status);
      REQUIRE(cache.equal(u, v).status == uv.status);
      if (uv.status == Status::equal) {
        ++equal;
        REQUIRE(replay(u, *uv.witness, sys) == v);
        REQUIRE(replay(v, reversed(*uv.witness), sys) == u);
        auto cached = cache.equal(u, v);
        REQUIRE(replay(u, *cached.witness, sys) == v);
      }
    }
    CHECK(equal >= 200);
  }
}

TEST_CASE("invariant pre-filters never contradict search") {
  const auto calcs = {Calculus::B, Calculus::SB, Calculus::M, Calculus::SG};
  for (auto calc : calcs) {
    const RelationSystem sys(calc, 3);
    const auto words = experiments::enumerate_words(calc, 3, 3);
    Budget b;
    b.use_invariants = false;
    EquivalenceCache cache(sys, b);
    std::mt19937_64 rng(17);
    for (int k = 0; k < 3000; ++k) {
      const auto& u = words[rng() % words.size()];
      const auto& v = words[rng() % words.size()];
      if (separating_invariant(u, v, calc)) {
        REQUIRE(cache.equal(u, v).status != Status::equal);
      }
    }
  }
  CHECK(separating_invariant(W("t1", 2), W("u1", 2), Calculus::M) == "colour-count");
  CHECK(separating_invariant(W("t1 u1", 2), BraidWord(2), Calculus::SG) == std::nullopt);
  CHECK(separating_invariant(W("s1", 3), W("s2", 3), Calculus::B) == "permutation");
}

TEST_CASE("tracking follows singular points") {
  const RelationSystem m(Calculus::M, 3);
  auto w = W("s1 s2 t1", 3);
  std::vector<int> ids{-1, -1, 7};
  // s1 s2 t1 = t2 s1 s2 moves the point from the end to the front.
  for (const auto& a : applicable_moves(w, m)) {
    if (a.result == W("t2 s1 s2", 3)) {
      auto out = track(ids, a.step, m);
      CHECK(out == std::vector<int>{7, -1, -1});
    }
  }
}

TEST_CASE("rules text round-trips") {
  for (auto calc : {Calculus::B, Calculus::SB, Calculus::M, Calculus::SG}) {
    for (int n = 2; n <= 4; ++n) {
      const RelationSystem sys(calc, n);
      auto text = sys.to_rules_text();
      auto lines = parse_rules_text(text, n);
      REQUIRE(lines.size() == sys.rules().size());
      for (std::size_t i = 0; i < lines.size(); ++i) {
        CHECK(lines[i].family == sys.rules()[i].family);
        CHECK(lines[i].left.key() == sys.rules()[i].left);
        CHECK(lines[i].right.key() == sys.rules()[i].right);
      }
    }
  }
  CHECK(RelationSystem(Calculus::M, 2).describe(Step{0, true, 0}).rfind("R", 0) == 0);
}

TEST_CASE("apply rejects mismatched steps") {
  const RelationSystem m(Calculus::M, 2);
  auto moves = applicable_moves(W("s1 t1", 2), m);
  REQUIRE_FALSE(moves.empty());
  auto r6 = std::find_if(moves.begin(), moves.end(),
                         [&](const Application& a) { return m.from(a.step).size() == 2; });
  REQUIRE(r6 != moves.end());
  CHECK_THROWS_AS(apply(W("t1 t1", 2), r6->step, m), InputError);
  CHECK_THROWS_AS(apply(W("s1", 2), Step{0, true, 3}, m), InputError);
}
