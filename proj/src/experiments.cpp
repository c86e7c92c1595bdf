#include "sbraid/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sbraid/desingular.hpp"

namespace sbraid::experiments {

using diamond::MEquality;
using diamond::SgEquality;
using rewrite::Budget;
using rewrite::Status;
using rewrite::Verdict;
using json = nlohmann::ordered_json;

std::vector<Generator> alphabet(Calculus calc, int n) {
  std::vector<Generator> letters;
  for (int i = 1; i < n; ++i) {
    letters.push_back(Generator::crossing(i, Sign::positive));
    letters.push_back(Generator::crossing(i, Sign::negative));
    if (calc != Calculus::B) letters.push_back(Generator::singular(i, Color::black));
    if (calc == Calculus::M || calc == Calculus::SG) {
      letters.push_back(Generator::singular(i, Color::white));
    }
  }
  return letters;
}

std::vector<BraidWord> enumerate_words(Calculus calc, int n, std::size_t max_length) {
  const auto letters = alphabet(calc, n);
  std::vector<BraidWord> out{BraidWord(n)};
  std::vector<std::vector<Generator>> layer{{}};
  for (std::size_t len = 1; len <= max_length && !letters.empty(); ++len) {
    std::vector<std::vector<Generator>> next;
    next.reserve(layer.size() * letters.size());
    for (const auto& prefix : layer) {
      for (auto g : letters) {
        auto w = prefix;
        w.push_back(g);
        next.push_back(std::move(w));
      }
    }
    for (const auto& w : next) out.emplace_back(n, w);
    layer = std::move(next);
  }
  return out;
}

void VerdictCounts::add(const Verdict& v) {
  switch (v.status) {
    case Status::equal: ++equal; break;
    case Status::distinct: ++distinct; break;
    case Status::inconclusive: ++inconclusive; break;
  }
  ++by_method[v.method];
}

void VerdictCounts::merge(const VerdictCounts& other) {
  equal += other.equal;
  distinct += other.distinct;
  inconclusive += other.inconclusive;
  for (const auto& [k, c] : other.by_method) by_method[k] += c;
}

namespace {

// Runs body(state, item) for every item on `jobs` threads. Each thread owns
// one state from make(). Callers store results by item index, so output
// does not depend on scheduling.
template <typename MakeState, typename Body>
void run_parallel(std::size_t count, int jobs, MakeState make, Body body) {
  const auto workers = static_cast<std::size_t>(
      std::clamp<long>(jobs, 1, static_cast<long>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    auto state = make();
    for (std::size_t i; (i = next.fetch_add(1)) < count;) body(state, i);
  };
  if (workers == 1) {
    work();
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
}

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::string> describe_chain(const rewrite::Chain& chain,
                                        const rewrite::RelationSystem& sys) {
  std::vector<std::string> out;
  for (const auto& s : chain) {
    out.push_back(sys.describe(s) + " @" + std::to_string(s.position + 1));
  }
  return out;
}

PairSample sample_of(const BraidWord& u, const BraidWord& v, const Verdict& verdict,
                     const rewrite::RelationSystem& sys) {
  PairSample s{u.to_string(), v.to_string(), std::string(to_string(verdict.status)),
               verdict.method, {}};
  if (verdict.witness) s.witness = describe_chain(*verdict.witness, sys);
  return s;
}

// Budget used for SG search in the injectivity experiment: the cheap
// rewrite-level invariants stay on but eta2 is off, so SB-distinct pairs
// with equal invariants are separated by exhausting closures, not by the
// same oracle that defined the classes.
constexpr bool kInjectivityUsesEta2 = false;

}  // namespace

InjectivityReport injectivity_experiment(int n, std::size_t max_length,
                                         const Budget& budget, int jobs,
                                         bool abort_on_violation) {
  Stopwatch clock;
  InjectivityReport report;
  report.run = RunInfo{n, max_length, budget, jobs, 0, 0};
  const auto words = enumerate_words(Calculus::SB, n, max_length);
  report.words = words.size();

  std::map<std::string, std::size_t> class_of_eta;
  std::vector<std::size_t> cls(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto image = desingular::eta(words[i]).to_string();
    auto [it, inserted] = class_of_eta.try_emplace(image, report.classes.size());
    if (inserted) {
      report.classes.push_back({words[i].to_string(), 0, image,
                                words[i].exponent_sum(), words[i].black_count()});
    }
    cls[i] = it->second;
    ++report.classes[it->second].size;
  }

  struct ItemResult {
    VerdictCounts cross, same;
    std::vector<std::size_t> violating;  // partner indices
    std::vector<std::size_t> cross_partners;
  };
  std::vector<ItemResult> results(words.size());
  constexpr std::size_t kSamples = 5;
  run_parallel(
      words.size(), jobs, [&] { return SgEquality(n, budget, kInjectivityUsesEta2); },
      [&](SgEquality& eq, std::size_t i) {
        auto& r = results[i];
        for (std::size_t j = i + 1; j < words.size(); ++j) {
          auto v = eq.equal(words[i], words[j]);
          if (cls[i] == cls[j]) {
            r.same.add(v);
            continue;
          }
          r.cross.add(v);
          if (v.status == Status::equal) r.violating.push_back(j);
          if (r.cross_partners.size() < kSamples) r.cross_partners.push_back(j);
        }
      });

  SgEquality replay_eq(n, budget, kInjectivityUsesEta2);
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto& r = results[i];
    report.cross_class.merge(r.cross);
    report.same_class.merge(r.same);
    for (auto j : r.violating) {
      auto v = replay_eq.equal(words[i], words[j]);
      report.violations.push_back(sample_of(words[i], words[j], v, replay_eq.sg_system()));
    }
    for (auto j : r.cross_partners) {
      if (report.samples.size() >= kSamples) break;
      auto v = replay_eq.equal(words[i], words[j]);
      report.samples.push_back(sample_of(words[i], words[j], v, replay_eq.sg_system()));
    }
  }
  report.pairs = report.cross_class.total() + report.same_class.total();

  if (n == 2) {
    InjectivityReport::ClosedForm cf;
    std::map<std::pair<long, std::size_t>, std::size_t> key_to_class;
    bool ok = true;
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto key = std::pair{words[i].exponent_sum(), words[i].black_count()};
      auto [it, inserted] = key_to_class.try_emplace(key, cls[i]);
      if (!inserted && it->second != cls[i]) ok = false;
    }
    cf.sb_index_matches = ok && key_to_class.size() == report.classes.size();

    const auto sg_words = enumerate_words(Calculus::SG, 2, std::min<std::size_t>(max_length, 4));
    cf.sg_words = sg_words.size();
    auto balance = [](const BraidWord& w) {
      return std::pair{w.exponent_sum(),
                       static_cast<long>(w.black_count()) - static_cast<long>(w.white_count())};
    };
    std::set<std::pair<long, long>> keys;
    for (const auto& w : sg_words) keys.insert(balance(w));
    cf.sg_classes = keys.size();
    SgEquality eq(2, budget, kInjectivityUsesEta2);
    for (std::size_t i = 0; i < sg_words.size(); ++i) {
      for (std::size_t j = i + 1; j < sg_words.size(); ++j) {
        auto v = eq.equal(sg_words[i], sg_words[j]);
        ++cf.sg_pairs;
        if (v.status == Status::inconclusive) {
          ++cf.sg_inconclusive;
        } else if ((v.status == Status::equal) !=
                   (balance(sg_words[i]) == balance(sg_words[j]))) {
          ++cf.sg_mismatches;
        }
      }
    }
    report.closed_form = cf;
  }
  report.run.wall_ms = clock.elapsed_ms();
  if (abort_on_violation && !report.violations.empty()) {
    const auto& s = report.violations.front();
    throw diamond::TheoremViolation("SB-distinct words found SG-equal: " + s.u +
                                    " vs " + s.v);
  }
  return report;
}

DiamondReport diamond_experiment(int n, std::size_t max_length, const Budget& budget,
                                 int jobs) {
  Stopwatch clock;
  DiamondReport report;
  report.run = RunInfo{n, max_length, budget, jobs, 0, 0};
  const auto betas = enumerate_words(Calculus::M, n, max_length);
  report.peaks_words = betas.size();

  struct ItemResult {
    std::size_t peaks = 0;
    std::map<std::string, std::map<std::string, std::size_t>> table;
    std::size_t failures = 0, aborts = 0, certificate_errors = 0;
    std::vector<std::string> aborts_seen;
    std::vector<std::pair<std::string, std::map<std::string, std::string>>> firsts;
  };
  std::vector<ItemResult> results(betas.size());
  run_parallel(
      betas.size(), jobs, [&] { return MEquality(n, budget); },
      [&](MEquality& m, std::size_t b) {
        const auto& beta = betas[b];
        auto& r = results[b];
        auto search = diamond::find_opposite_pairs(beta, budget);
        // One certificate per (erased word, erased points).
        std::vector<const diamond::PairSite*> certs;
        std::set<std::pair<std::string, std::pair<int, int>>> seen;
        for (const auto& site : search.sites) {
          auto pts = std::minmax(site.points.first, site.points.second);
          if (seen.insert({site.erased().key(), pts}).second) certs.push_back(&site);
        }
        for (std::size_t a = 0; a < certs.size(); ++a) {
          for (std::size_t g = a; g < certs.size(); ++g) {
            ++r.peaks;
            auto alpha = certs[a]->erased();
            auto gamma = certs[g]->erased();
            auto up = diamond::inverse(certs[a]->erase_move());
            auto down = certs[g]->erase_move();
            try {
              auto res = diamond::diamond_check(alpha, beta, gamma, up, down, budget, &m);
              std::string c(diamond::to_string(res.peak_case));
              std::string o(diamond::to_string(res.outcome));
              ++r.table[c][o];
              if (res.outcome == diamond::Outcome::failure) ++r.failures;
              if (res.outcome == diamond::Outcome::valley) {
                auto ea = diamond::apply_move(alpha, *res.alpha_to_eta, m.system());
                auto eg = diamond::apply_move(gamma, *res.gamma_to_eta, m.system());
                if (ea != *res.eta || eg != *res.eta) ++r.certificate_errors;
              }
              if (res.outcome == diamond::Outcome::m_equal &&
                  rewrite::replay(alpha, *res.equality_witness, m.system()) != gamma) {
                ++r.certificate_errors;
              }
              std::map<std::string, std::string> sample{
                  {"case", c}, {"outcome", o}, {"alpha", alpha.to_string()},
                  {"beta", beta.to_string()}, {"gamma", gamma.to_string()}};
              if (res.eta) sample["eta"] = res.eta->to_string();
              r.firsts.emplace_back(c + "/" + o, std::move(sample));
            } catch (const diamond::TheoremViolation& err) {
              ++r.aborts;
              r.aborts_seen.emplace_back(err.what());
            }
          }
        }
      });

  std::set<std::string> sampled;
  for (auto& r : results) {
    report.peaks += r.peaks;
    for (const auto& [c, row] : r.table) {
      for (const auto& [o, k] : row) report.table[c][o] += k;
    }
    report.failures += r.failures;
    report.aborts += r.aborts;
    report.certificate_errors += r.certificate_errors;
    for (auto& m : r.aborts_seen) report.abort_messages.push_back(std::move(m));
    for (auto& [tag, sample] : r.firsts) {
      if (sampled.insert(tag).second) report.samples.push_back(std::move(sample));
    }
  }
  report.run.wall_ms = clock.elapsed_ms();
  return report;
}

namespace {

BraidWord random_word(int n, std::size_t length, Calculus calc, std::mt19937_64& rng) {
  const auto letters = alphabet(calc, n);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::vector<Generator> out;
  for (std::size_t k = 0; k < length; ++k) out.push_back(letters[pick(rng)]);
  return BraidWord(n, std::move(out));
}

}  // namespace

ConfluenceReport confluence_experiment(int n, std::size_t max_length, std::size_t count,
                                       std::uint64_t seed, const Budget& budget,
                                       int jobs) {
  Stopwatch clock;
  ConfluenceReport report;
  report.run = RunInfo{n, max_length, budget, jobs, seed, 0};
  report.words = count;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::vector<BraidWord> words;
  for (std::size_t k = 0; k < count; ++k) words.push_back(random_word(n, len(rng), Calculus::SG, rng));

  struct ItemResult {
    Verdict verdict;
    bool truncated = false;
    bool bound_ok = true;
    std::size_t deletions = 0;
    std::string det, rnd;
  };
  std::vector<ItemResult> results(count);
  run_parallel(
      count, jobs, [&] { return MEquality(n, budget); },
      [&](MEquality& m, std::size_t i) {
        const auto& w = words[i];
        auto det = diamond::reduce_irreducible(w, budget, diamond::Strategy::deterministic());
        auto rnd = diamond::reduce_irreducible(
            w, budget, diamond::Strategy::randomized(seed + 1 + i));
        auto& r = results[i];
        r.truncated = det.truncated || rnd.truncated;
        r.deletions = det.moves.size() + rnd.moves.size();
        const auto bound = w.singular_count() / 2;
        r.bound_ok = det.moves.size() <= bound && rnd.moves.size() <= bound &&
                     det.result.singular_count() + 2 * det.moves.size() == w.singular_count();
        r.verdict = m.equal(det.result, rnd.result);
        r.det = det.result.to_string();
        r.rnd = rnd.result.to_string();
      });

  for (std::size_t i = 0; i < count; ++i) {
    const auto& r = results[i];
    report.truncated += r.truncated;
    report.deletions += r.deletions;
    report.bound_violations += !r.bound_ok;
    ++report.by_method[r.verdict.method];
    if (r.verdict.status == Status::equal) {
      ++report.equal;
      continue;
    }
    if (r.verdict.status == Status::distinct &&
        r.verdict.method.rfind("invariant:", 0) == 0) {
      ++report.confirmed_divergences;
    } else {
      ++report.unconfirmed;
    }
    if (report.divergences.size() < 10) {
      report.divergences.push_back({{"word", words[i].to_string()},
                                    {"deterministic", r.det},
                                    {"randomized", r.rnd},
                                    {"verdict", std::string(to_string(r.verdict.status))},
                                    {"method", r.verdict.method}});
    }
  }
  report.run.wall_ms = clock.elapsed_ms();
  return report;
}

namespace {

struct ResolutionCase {
  BraidWord w;
  BraidWord w_prime;
  rewrite::Chain chain;
  std::size_t point = 0;
};

// A random M word with at least one singular letter, walked through a few
// random rewrite steps inside the length cap.
ResolutionCase make_resolution_case(int n, std::size_t max_length, const rewrite::RelationSystem& sys,
                            const Budget& budget, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  auto w = random_word(n, len(rng), Calculus::M, rng);
  std::vector<std::size_t> singular;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_singular()) singular.push_back(i);
  }
  if (singular.empty()) {
    std::uniform_int_distribution<std::size_t> where(0, w.size() - 1);
    std::uniform_int_distribution<int> idx(1, n - 1);
    auto letters = w.letters();
    auto p = where(rng);
    letters[p] = Generator::singular(idx(rng), rng() % 2 ? Color::white : Color::black);
    w = BraidWord(n, letters);
    singular.push_back(p);
  }
  ResolutionCase c{w, w, {}, singular[std::uniform_int_distribution<std::size_t>(
                              0, singular.size() - 1)(rng)]};
  const auto cap = budget.cap_for(w.size());
  std::uniform_int_distribution<int> steps(1, 4);
  for (int k = steps(rng); k > 0; --k) {
    auto moves = rewrite::applicable_moves(c.w_prime, sys);
    std::erase_if(moves, [&](const rewrite::Application& a) { return a.result.size() > cap; });
    if (moves.empty()) break;
    auto& pick = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    c.chain.push_back(pick.step);
    c.w_prime = pick.result;
  }
  return c;
}

BraidWord resolve_key(const std::string& key, int n, std::ptrdiff_t offset, Sign s) {
  auto w = BraidWord::from_key(n, key);
  if (offset < 0) return w;
  return resolve(w, static_cast<std::size_t>(offset), s);
}

}  // namespace

ResolutionReport resolution_experiment(int n, std::size_t max_length, std::size_t count,
                               std::uint64_t seed, const Budget& budget, int jobs) {
  Stopwatch clock;
  ResolutionReport report;
  report.run = RunInfo{n, max_length, budget, jobs, seed, 0};
  report.pairs = count;
  const rewrite::RelationSystem sys(Calculus::M, n);
  std::mt19937_64 rng(seed);
  std::vector<ResolutionCase> cases;
  for (std::size_t k = 0; k < count; ++k) {
    cases.push_back(make_resolution_case(n, max_length, sys, budget, rng));
  }

  struct ItemResult {
    bool ok = true;
    std::size_t steps = 0, confirmations = 0;
    std::map<std::string, std::size_t> kinds;
    std::string failure;
  };
  std::vector<ItemResult> results(count);
  // Source -> target lookup over oriented rule instances.
  std::set<std::pair<std::string, std::string>> instances;
  for (const auto& r : sys.rules()) {
    instances.insert({r.left, r.right});
    instances.insert({r.right, r.left});
  }

  run_parallel(
      count, jobs, [&] { return MEquality(n, budget); },
      [&](MEquality& m, std::size_t k) {
        const auto& c = cases[k];
        auto& r = results[k];
        auto fail = [&](const std::string& why) {
          if (r.ok) r.failure = c.w.to_string() + " ~ " + c.w_prime.to_string() + ": " + why;
          r.ok = false;
        };
        for (auto s : {Sign::positive, Sign::negative}) {
          // Replay the chain through the resolution: each step, with the
          // tracked point resolved on both sides, must be an identity, a rule
          // instance, or a searched M-equality.
          BraidWord cur = c.w;
          BraidWord resolved = resolve(c.w, c.point, s);
          std::vector<int> ids(c.w.size(), -1);
          ids[c.point] = 0;
          for (const auto& step : c.chain) {
            const auto& src = sys.from(step);
            const auto& dst = sys.to(step);
            auto at = std::find(ids.begin(), ids.end(), 0) - ids.begin();
            auto next_ids = rewrite::track(ids, step, sys);
            auto next_at = std::find(next_ids.begin(), next_ids.end(), 0) - next_ids.begin();
            const auto pos = static_cast<std::ptrdiff_t>(step.position);
            const bool inside = at >= pos && at < pos + static_cast<std::ptrdiff_t>(src.size());
            ++r.steps;
            auto rsrc = resolve_key(src, n, inside ? at - pos : -1, s);
            auto rdst = resolve_key(dst, n, inside ? next_at - pos : -1, s);
            std::string kind;
            if (!inside) {
              kind = "untouched";
            } else if (rsrc == rdst) {
              kind = "identity";
            } else if (instances.count({rsrc.key(), rdst.key()})) {
              kind = "rule";
            } else {
              auto v = m.equal(rsrc, rdst);
              kind = "search";
              if (v.status != Status::equal) {
                fail("resolved step " + rsrc.to_string() + " -> " + rdst.to_string() +
                     " not confirmed");
              }
            }
            ++r.kinds[kind];
            // The resolved word advances by the resolved replacement.
            auto rkey = resolved.key();
            if (rkey.compare(step.position, rsrc.size(), rsrc.key()) != 0) {
              fail("resolved word lost the step source");
              break;
            }
            rkey.replace(step.position, rsrc.size(), rdst.key());
            resolved = BraidWord::from_key(n, rkey);
            cur = rewrite::apply(cur, step, sys);
            ids = std::move(next_ids);
          }
          auto at = std::find(ids.begin(), ids.end(), 0) - ids.begin();
          auto target = resolve(c.w_prime, static_cast<std::size_t>(at), s);
          if (resolved != target) fail("replayed chain does not end at w'(p)");
          auto v = m.equal(resolve(c.w, c.point, s), target);
          if (v.status == Status::equal) {
            ++r.confirmations;
          } else {
            fail(std::string("search verdict ") + std::string(to_string(v.status)) +
                 " for sign " + (s == Sign::positive ? "+" : "-"));
          }
        }
      });

  for (auto& r : results) {
    report.passed += r.ok;
    report.chain_steps += r.steps;
    report.search_confirmations += r.confirmations;
    for (const auto& [k, c] : r.kinds) report.step_kinds[k] += c;
    if (!r.ok && report.failures.size() < 10) report.failures.push_back(r.failure);
  }
  report.run.wall_ms = clock.elapsed_ms();
  return report;
}

namespace {

json run_json(const RunInfo& run, bool timing) {
  json params = {{"n", run.strands},
                 {"max_length", run.max_length},
                 {"max_nodes", run.budget.max_nodes},
                 {"length_slack", run.budget.length_slack},
                 {"seed", run.seed}};
  if (run.budget.max_length) params["max_length_cap"] = *run.budget.max_length;
  json j = {{"schema", 1}, {"parameters", params}};
  if (timing) j["wall_time_ms"] = run.wall_ms;
  return j;
}

json counts_json(const VerdictCounts& c) {
  return {{"equal", c.equal},
          {"distinct", c.distinct},
          {"inconclusive", c.inconclusive},
          {"by_method", c.by_method}};
}

json samples_json(const std::vector<PairSample>& samples) {
  json arr = json::array();
  for (const auto& s : samples) {
    arr.push_back({{"u", s.u}, {"v", s.v}, {"verdict", s.verdict},
                   {"method", s.method}, {"witness", s.witness}});
  }
  return arr;
}

}  // namespace

std::string to_json(const InjectivityReport& r, bool timing) {
  json j = run_json(r.run, timing);
  j["experiment"] = "injectivity";
  j["words"] = r.words;
  json classes = json::array();
  for (const auto& c : r.classes) {
    classes.push_back({{"representative", c.representative}, {"size", c.size},
                       {"exponent_sum", c.exponent_sum}, {"tau_count", c.tau_count},
                       {"eta", c.eta}});
  }
  j["class_count"] = r.classes.size();
  j["classes"] = classes;
  j["pairs"] = r.pairs;
  j["sb_distinct_pairs"] = counts_json(r.cross_class);
  j["sb_equal_pairs"] = counts_json(r.same_class);
  j["violations"] = r.violations.size();
  j["violation_samples"] = samples_json(r.violations);
  j["samples"] = samples_json(r.samples);
  if (r.closed_form) {
    const auto& cf = *r.closed_form;
    j["closed_form"] = {{"sb_index_matches", cf.sb_index_matches},
                        {"sg_words", cf.sg_words},
                        {"sg_classes", cf.sg_classes},
                        {"sg_pairs", cf.sg_pairs},
                        {"sg_mismatches", cf.sg_mismatches},
                        {"sg_inconclusive", cf.sg_inconclusive}};
  }
  return j.dump(2) + "\n";
}

std::string to_json(const DiamondReport& r, bool timing) {
  json j = run_json(r.run, timing);
  j["experiment"] = "diamond";
  j["beta_words"] = r.peaks_words;
  j["peaks"] = r.peaks;
  j["table"] = r.table;
  j["failures"] = r.failures;
  j["aborts"] = r.aborts;
  j["certificate_errors"] = r.certificate_errors;
  j["abort_messages"] = r.abort_messages;
  j["samples"] = r.samples;
  return j.dump(2) + "\n";
}

std::string to_json(const ConfluenceReport& r, bool timing) {
  json j = run_json(r.run, timing);
  j["experiment"] = "confluence";
  j["words"] = r.words;
  j["equal"] = r.equal;
  j["confirmed_divergences"] = r.confirmed_divergences;
  j["unconfirmed"] = r.unconfirmed;
  j["truncated"] = r.truncated;
  j["deletions"] = r.deletions;
  j["bound_violations"] = r.bound_violations;
  j["by_method"] = r.by_method;
  j["divergences"] = r.divergences;
  return j.dump(2) + "\n";
}

std::string to_json(const ResolutionReport& r, bool timing) {
  json j = run_json(r.run, timing);
  j["experiment"] = "resolution";
  j["pairs"] = r.pairs;
  j["passed"] = r.passed;
  j["chain_steps"] = r.chain_steps;
  j["step_kinds"] = r.step_kinds;
  j["search_confirmations"] = r.search_confirmations;
  j["failures"] = r.failures;
  return j.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const InjectivityReport& r) {
  std::ostringstream out;
  out << "class,representative,size,exponent_sum,tau_count,eta\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    out << i << ',' << csv_field(c.representative) << ',' << c.size << ','
        << c.exponent_sum << ',' << c.tau_count << ',' << csv_field(c.eta) << '\n';
  }
  return out.str();
}

std::string to_csv(const DiamondReport& r) {
  std::ostringstream out;
  out << "case,outcome,count\n";
  for (const auto& [c, row] : r.table) {
    for (const auto& [o, k] : row) out << c << ',' << o << ',' << k << '\n';
  }
  return out.str();
}

std::string to_csv(const ConfluenceReport& r) {
  std::ostringstream out;
  out << "category,count\n"
      << "equal," << r.equal << '\n'
      << "confirmed_divergence," << r.confirmed_divergences << '\n'
      << "unconfirmed," << r.unconfirmed << '\n'
      << "truncated," << r.truncated << '\n';
  return out.str();
}

}  // namespace sbraid::experiments
