#include "sbraid/diamond.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "sbraid/desingular.hpp"

namespace sbraid::diamond {

using rewrite::Budget;
using rewrite::Chain;
using rewrite::RelationSystem;
using rewrite::Status;
using rewrite::Verdict;

namespace {

std::pair<Generator, Generator> pair_letters(int index, PairOrder order) {
  auto tau = Generator::singular(index, Color::black);
  auto ups = Generator::singular(index, Color::white);
  return order == PairOrder::tau_upsilon ? std::pair{tau, ups} : std::pair{ups, tau};
}

bool is_opposite_pair(char a, char b) {
  auto ca = static_cast<std::uint8_t>(a);
  auto cb = static_cast<std::uint8_t>(b);
  return (ca & 2u) && (ca ^ 1u) == cb;
}

std::vector<int> singular_ids(const BraidWord& w) {
  std::vector<int> ids(w.size(), -1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_singular()) ids[i] = static_cast<int>(i);
  }
  return ids;
}

std::vector<int> track_chain(std::vector<int> ids, const Chain& chain,
                             const RelationSystem& sys) {
  for (const auto& s : chain) ids = rewrite::track(ids, s, sys);
  return ids;
}

BraidWord erase_at(const BraidWord& w, std::size_t pos) {
  auto letters = w.letters();
  letters.erase(letters.begin() + static_cast<long>(pos),
                letters.begin() + static_cast<long>(pos) + 2);
  return BraidWord(w.strands(), std::move(letters));
}

}  // namespace

BraidWord apply_move(const BraidWord& source, const Move& move,
                     const RelationSystem& m_system) {
  BraidWord cur = rewrite::replay(source, move.pre_chain, m_system);
  auto [first, second] = pair_letters(move.index, move.order);
  if (move.direction == Direction::erase) {
    if (move.position + 1 >= cur.size() || cur[move.position] != first ||
        cur[move.position + 1] != second) {
      throw InputError("no " + first.to_string() + " " + second.to_string() +
                       " pair at position " + std::to_string(move.position + 1) +
                       " of " + cur.to_string());
    }
    cur = erase_at(cur, move.position);
  } else {
    if (move.position > cur.size()) {
      throw InputError("insertion position out of range");
    }
    auto letters = cur.letters();
    letters.insert(letters.begin() + static_cast<long>(move.position), {first, second});
    cur = BraidWord(cur.strands(), std::move(letters));
  }
  return rewrite::replay(cur, move.post_chain, m_system);
}

Move inverse(const Move& move) {
  Move inv = move;
  inv.direction = move.direction == Direction::erase ? Direction::insert : Direction::erase;
  inv.pre_chain = rewrite::reversed(move.post_chain);
  inv.post_chain = rewrite::reversed(move.pre_chain);
  return inv;
}

Move PairSite::erase_move() const {
  Move m;
  m.direction = Direction::erase;
  m.position = position;
  m.index = representative[position].index();
  m.order = representative[position].color() == Color::black ? PairOrder::tau_upsilon
                                                             : PairOrder::upsilon_tau;
  m.pre_chain = pre_chain;
  return m;
}

BraidWord PairSite::erased() const { return erase_at(representative, position); }

namespace {

PairSearch find_pairs(const BraidWord& w, const RelationSystem& sys,
                      const Budget& budget) {
  require_alphabet(w, Calculus::M);
  PairSearch search;
  // Relations preserve both colour counts, so no representative can hold a
  // pair unless w has letters of both colours.
  if (w.black_count() == 0 || w.white_count() == 0) return search;
  auto c = rewrite::closure(w, sys, budget);
  search.truncated = c.truncated;
  search.nodes = c.words.size();
  const auto ids = singular_ids(w);
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    const auto& key = c.words[i];
    for (std::size_t j = 0; j + 1 < key.size(); ++j) {
      if (!is_opposite_pair(key[j], key[j + 1])) continue;
      PairSite site;
      site.representative = BraidWord::from_key(w.strands(), key);
      site.position = j;
      site.pre_chain = c.chain_to(i);
      auto tracked = track_chain(ids, site.pre_chain, sys);
      site.points = {tracked[j], tracked[j + 1]};
      search.sites.push_back(std::move(site));
    }
  }
  return search;
}

}  // namespace

PairSearch find_opposite_pairs(const BraidWord& w, const Budget& budget) {
  RelationSystem sys(Calculus::M, w.strands());
  return find_pairs(w, sys, budget);
}

ReductionTrace reduce_irreducible(const BraidWord& w, const Budget& budget,
                                  Strategy strategy) {
  RelationSystem sys(Calculus::M, w.strands());
  ReductionTrace trace;
  trace.start = w;
  std::mt19937_64 rng(strategy.seed);
  BraidWord cur = w;
  for (;;) {
    auto search = find_pairs(cur, sys, budget);
    trace.truncated |= search.truncated;
    if (search.sites.empty()) break;
    std::size_t pick = 0;
    if (strategy.kind == Strategy::Kind::randomized) {
      pick = std::uniform_int_distribution<std::size_t>(0, search.sites.size() - 1)(rng);
    }
    const auto& site = search.sites[pick];
    trace.moves.push_back(site.erase_move());
    cur = site.erased();
  }
  trace.result = cur;
  return trace;
}

MEquality::MEquality(int strands, Budget budget, bool use_eta2)
    : system_(std::make_unique<RelationSystem>(Calculus::M, strands)),
      budget_(budget),
      use_eta2_(use_eta2),
      cache_(*system_, budget) {}

Verdict MEquality::equal(const BraidWord& u, const BraidWord& v) {
  if (u == v || !use_eta2_ ||
      (budget_.use_invariants &&
       rewrite::separating_invariant(u, v, Calculus::M))) {
    return cache_.equal(u, v);
  }
  if (desingular::eta2(u) != desingular::eta2(v)) {
    Verdict verdict;
    verdict.status = Status::distinct;
    verdict.method = "invariant:eta2";
    verdict.max_length = budget_.cap_for(std::max(u.size(), v.size()));
    verdict.max_nodes = budget_.max_nodes;
    return verdict;
  }
  return cache_.equal(u, v);
}

SgEquality::SgEquality(int strands, Budget budget, bool use_eta2)
    : budget_(budget), sg_(Calculus::SG, strands), m_(strands, budget, use_eta2) {
  // M rule ids must coincide with SG rule ids so M chains replay in SG.
  const auto& m_rules = m_.system().rules();
  for (std::size_t i = 0; i < m_rules.size(); ++i) {
    if (m_rules[i].left != sg_.rules()[i].left ||
        m_rules[i].right != sg_.rules()[i].right) {
      throw std::logic_error("M and SG rule numbering diverged");
    }
  }
}

const ReductionTrace& SgEquality::reduction(const BraidWord& w) {
  auto key = w.key();
  auto it = reductions_.find(key);
  if (it == reductions_.end()) {
    it = reductions_.emplace(key, reduce_irreducible(w, budget_)).first;
  }
  return it->second;
}

Chain SgEquality::reduction_chain(const ReductionTrace& trace) const {
  Chain chain;
  for (const auto& move : trace.moves) {
    chain.insert(chain.end(), move.pre_chain.begin(), move.pre_chain.end());
    auto [first, second] = pair_letters(move.index, move.order);
    std::string lhs{static_cast<char>(first.code()), static_cast<char>(second.code())};
    for (std::uint32_t id = 0; id < sg_.rules().size(); ++id) {
      const auto& r = sg_.rule(id);
      if (r.family == rewrite::Family::R8 && r.left == lhs) {
        chain.push_back(rewrite::Step{id, true, move.position});
        break;
      }
    }
    chain.insert(chain.end(), move.post_chain.begin(), move.post_chain.end());
  }
  return chain;
}

Verdict SgEquality::equal(const BraidWord& u, const BraidWord& v) {
  require_alphabet(u, Calculus::SG);
  require_alphabet(v, Calculus::SG);
  if (u.strands() != v.strands() || u.strands() != sg_.strands()) {
    throw InputError("strand count mismatch");
  }
  const ReductionTrace tu = reduction(u);
  const ReductionTrace tv = reduction(v);
  Verdict verdict = m_.equal(tu.result, tv.result);
  verdict.method = "irreducible:" + verdict.method;
  if (verdict.status == Status::equal) {
    Chain chain = reduction_chain(tu);
    chain.insert(chain.end(), verdict.witness->begin(), verdict.witness->end());
    auto back = rewrite::reversed(reduction_chain(tv));
    chain.insert(chain.end(), back.begin(), back.end());
    verdict.witness = std::move(chain);
  } else if (verdict.status == Status::distinct && (tu.truncated || tv.truncated)) {
    verdict.status = Status::inconclusive;
  }
  return verdict;
}

Verdict sg_equal(const BraidWord& u, const BraidWord& v, const Budget& budget) {
  SgEquality eq(u.strands(), budget);
  return eq.equal(u, v);
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::m_equal: return "m_equal";
    case Outcome::valley: return "valley";
    case Outcome::failure: return "failure";
  }
  return "?";
}

std::string_view to_string(PeakCase c) {
  switch (c) {
    case PeakCase::same_pair: return "a";
    case PeakCase::disjoint: return "b";
    case PeakCase::shared_point: return "c";
  }
  return "?";
}

namespace {

// Checks that `move` carries beta to target, extending post_chain by an
// M-equality witness when it lands on a different representative.
Move certify(const BraidWord& beta, const BraidWord& target, Move move,
             MEquality& m, const std::string& label) {
  BraidWord reached(beta.strands());
  try {
    reached = apply_move(beta, move, m.system());
  } catch (const InputError& err) {
    throw InputError("invalid " + label + " certificate: " + err.what());
  }
  if (reached == target) return move;
  auto v = m.equal(reached, target);
  if (v.status != Status::equal) {
    throw InputError("invalid " + label + " certificate: reaches " +
                     reached.to_string() + ", not " + target.to_string());
  }
  move.post_chain.insert(move.post_chain.end(), v.witness->begin(), v.witness->end());
  return move;
}

std::set<int> erased_points(const BraidWord& beta, const Move& erase,
                            const RelationSystem& sys) {
  auto ids = track_chain(singular_ids(beta), erase.pre_chain, sys);
  return {ids[erase.position], ids[erase.position + 1]};
}

}  // namespace

DiamondResult diamond_check(const BraidWord& alpha, const BraidWord& beta,
                            const BraidWord& gamma, const Move& alpha_up,
                            const Move& beta_down, const Budget& budget,
                            MEquality* m_equality) {
  for (const auto* w : {&alpha, &beta, &gamma}) require_alphabet(*w, Calculus::M);
  if (alpha.strands() != beta.strands() || gamma.strands() != beta.strands()) {
    throw InputError("strand count mismatch");
  }
  if (alpha_up.direction != Direction::insert || beta_down.direction != Direction::erase) {
    throw InputError("expected an insertion alpha -> beta and an erasure beta -> gamma");
  }
  std::optional<MEquality> local;
  if (!m_equality) m_equality = &local.emplace(beta.strands(), budget);
  MEquality& m = *m_equality;
  const auto& sys = m.system();

  // alpha -> beta as an insertion is checked via its inverse from beta.
  Move to_alpha = certify(beta, alpha, inverse(alpha_up), m, "alpha");
  Move to_gamma = certify(beta, gamma, beta_down, m, "gamma");

  DiamondResult result;
  auto pq = erased_points(beta, to_alpha, sys);
  auto rs = erased_points(beta, to_gamma, sys);
  std::size_t shared = 0;
  for (int p : pq) shared += rs.count(p);
  result.peak_case = shared == 2   ? PeakCase::same_pair
                     : shared == 1 ? PeakCase::shared_point
                                   : PeakCase::disjoint;

  auto direct = m.equal(alpha, gamma);
  if (direct.status == Status::equal) {
    result.outcome = Outcome::m_equal;
    result.equality_witness = direct.witness;
    return result;
  }

  auto from_alpha = find_pairs(alpha, sys, budget);
  auto from_gamma = find_pairs(gamma, sys, budget);
  auto distinct_sites = [](const PairSearch& s) {
    std::vector<std::pair<BraidWord, const PairSite*>> out;
    std::set<std::string> seen;
    for (const auto& site : s.sites) {
      auto e = site.erased();
      if (seen.insert(e.key()).second) out.emplace_back(std::move(e), &site);
    }
    return out;
  };
  auto ends_a = distinct_sites(from_alpha);
  auto ends_g = distinct_sites(from_gamma);
  bool exhausted = direct.status == Status::distinct && !from_alpha.truncated &&
                   !from_gamma.truncated;
  for (const auto& [eta_a, site_a] : ends_a) {
    for (const auto& [eta_g, site_g] : ends_g) {
      auto v = m.equal(eta_a, eta_g);
      if (v.status == Status::equal) {
        result.outcome = Outcome::valley;
        result.eta = eta_a;
        result.alpha_to_eta = site_a->erase_move();
        Move g = site_g->erase_move();
        g.post_chain = rewrite::reversed(*v.witness);
        result.gamma_to_eta = std::move(g);
        return result;
      }
      if (v.status != Status::distinct) exhausted = false;
    }
  }

  result.outcome = Outcome::failure;
  result.report = "peak " + alpha.to_string() + " <- " + beta.to_string() +
                  " -> " + gamma.to_string() + " not closed (case " +
                  std::string(to_string(result.peak_case)) + ")";
  if (exhausted) {
    throw TheoremViolation("diamond lemma violated with exhausted search: " +
                           result.report);
  }
  result.report += " within budget";
  return result;
}

}  // namespace sbraid::diamond
