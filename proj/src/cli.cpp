#include "sbraid/cli.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sbraid/desingular.hpp"
#include "sbraid/diamond.hpp"
#include "sbraid/experiments.hpp"
#include "sbraid/garside.hpp"
#include "sbraid/rewrite.hpp"

namespace sbraid::cli {

namespace {

using json = nlohmann::ordered_json;
using rewrite::Status;

struct Options {
  std::string verb;
  std::vector<std::string> words;
  std::string calc = "M";
  int n = 3;
  std::size_t max_nodes = 200000;
  std::optional<std::size_t> max_len;
  std::size_t slack = 2;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "text";
  std::string strategy = "deterministic";
  bool timing = false;
  bool length_preserving = false;
  std::string csv_path;
  std::string rules_out;
};

class Command {
 public:
  Command(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {
    calc_ = parse_calculus(opt.calc);
    budget_.max_nodes = opt.max_nodes;
    budget_.length_slack = opt.slack;
    budget_.length_preserving_only = opt.length_preserving;
    // For the experiment verbs --max-len is the enumeration length.
    if (opt.verb != "inject" && opt.verb != "diamond") budget_.max_length = opt.max_len;
  }

  int run() {
    if (!opt_.rules_out.empty()) {
      std::ofstream f(opt_.rules_out);
      f << rewrite::RelationSystem(calc_, opt_.n).to_rules_text();
    }
    const auto& v = opt_.verb;
    if (v == "parse") return parse();
    if (v == "perm") return perm();
    if (v == "nf") return nf();
    if (v == "equal") return equal();
    if (v == "eta") return eta();
    if (v == "reduce") return reduce();
    if (v == "closure") return closure();
    if (v == "diamond") return diamond();
    if (v == "inject") return inject();
    throw InputError("unknown verb " + v);
  }

 private:
  bool as_json() const { return opt_.format == "json"; }

  std::vector<BraidWord> operands(std::size_t expected = 0) const {
    if (expected && opt_.words.size() != expected) {
      throw InputError(opt_.verb + " expects " + std::to_string(expected) + " word(s)");
    }
    if (!expected && opt_.words.empty()) throw InputError(opt_.verb + " expects a word");
    std::vector<BraidWord> out;
    for (std::size_t k = 0; k < opt_.words.size(); ++k) {
      try {
        auto w = parse_word(opt_.words[k], opt_.n);
        require_alphabet(w, calc_);
        out.push_back(std::move(w));
      } catch (const InputError& e) {
        throw InputError("operand " + std::to_string(k + 1) + ": " + e.what());
      }
    }
    return out;
  }

  json header() const {
    return {{"schema", 1}, {"command", opt_.verb},
            {"calc", std::string(to_string(calc_))}, {"n", opt_.n}};
  }

  void emit(const json& j) { out_ << j.dump(2) << "\n"; }

  json chain_json(const rewrite::Chain& chain, const rewrite::RelationSystem& sys) {
    json arr = json::array();
    for (const auto& s : chain) {
      arr.push_back({{"rule", sys.describe(s)}, {"position", s.position + 1}});
    }
    return arr;
  }

  int parse() {
    auto words = operands();
    json list = json::array();
    for (const auto& w : words) {
      if (as_json()) {
        list.push_back({{"canonical", w.to_string()}, {"length", w.size()}});
      } else {
        out_ << w.to_string() << "\n";
      }
    }
    if (as_json()) {
      auto j = header();
      j["words"] = list;
      emit(j);
    }
    return kVerdict;
  }

  int perm() {
    auto words = operands();
    json list = json::array();
    for (const auto& w : words) {
      auto p = underlying_permutation(w).to_string();
      if (as_json()) {
        list.push_back({{"word", w.to_string()}, {"permutation", p}});
      } else {
        out_ << p << "\n";
      }
    }
    if (as_json()) {
      auto j = header();
      j["results"] = list;
      emit(j);
    }
    return kVerdict;
  }

  int nf() {
    auto words = operands();
    json list = json::array();
    for (const auto& w : words) {
      auto form = garside::normal_form(w);
      if (as_json()) {
        json factors = json::array();
        for (const auto& f : form.factors) factors.push_back(f.permutation().to_string());
        list.push_back({{"word", w.to_string()}, {"normal_form", form.to_string()},
                        {"infimum", form.infimum}, {"factors", factors}});
      } else {
        out_ << form.to_string() << "\n";
      }
    }
    if (as_json()) {
      auto j = header();
      j["results"] = list;
      emit(j);
    }
    return kVerdict;
  }

  int equal() {
    auto words = operands(2);
    const auto& u = words[0];
    const auto& v = words[1];
    rewrite::Verdict verdict;
    std::optional<rewrite::RelationSystem> sys;
    switch (calc_) {
      case Calculus::B:
        verdict.status = garside::equal_B(u, v) ? Status::equal : Status::distinct;
        verdict.method = "garside";
        break;
      case Calculus::SB:
        verdict.status =
            desingular::oracle_equal_SB(u, v) ? Status::equal : Status::distinct;
        verdict.method = "eta";
        break;
      case Calculus::M: {
        diamond::MEquality m(opt_.n, budget_);
        verdict = m.equal(u, v);
        sys.emplace(Calculus::M, opt_.n);
        break;
      }
      case Calculus::SG: {
        diamond::SgEquality sg(opt_.n, budget_);
        verdict = sg.equal(u, v);
        sys.emplace(Calculus::SG, opt_.n);
        break;
      }
    }
    if (as_json()) {
      auto j = header();
      j["u"] = u.to_string();
      j["v"] = v.to_string();
      j["verdict"] = std::string(to_string(verdict.status));
      j["method"] = verdict.method;
      if (sys) {
        j["bound"] = {{"max_length", verdict.max_length}, {"max_nodes", verdict.max_nodes}};
        j["nodes"] = verdict.nodes;
      }
      if (verdict.witness && sys) j["witness"] = chain_json(*verdict.witness, *sys);
      emit(j);
    } else {
      out_ << to_string(verdict.status) << " (" << verdict.method;
      if (sys && verdict.status != Status::equal) {
        out_ << ", max_length " << verdict.max_length << ", max_nodes " << verdict.max_nodes;
      }
      out_ << ")\n";
      if (verdict.witness && sys) {
        for (const auto& s : *verdict.witness) {
          out_ << "  " << sys->describe(s) << " @" << s.position + 1 << "\n";
        }
      }
    }
    return verdict.status == Status::inconclusive ? kInconclusive : kVerdict;
  }

  int eta() {
    auto words = operands();
    json list = json::array();
    for (const auto& w : words) {
      auto image = calc_ == Calculus::M || calc_ == Calculus::SG ? desingular::eta2(w)
                                                                 : desingular::eta(w);
      if (as_json()) {
        list.push_back({{"word", w.to_string()}, {"image", image.to_string()},
                        {"terms", image.size()}});
      } else {
        out_ << image.to_string() << "\n";
      }
    }
    if (as_json()) {
      auto j = header();
      j["results"] = list;
      emit(j);
    }
    return kVerdict;
  }

  int reduce() {
    if (calc_ != Calculus::M && calc_ != Calculus::SG && calc_ != Calculus::SB) {
      throw InputError("reduce needs --calc SB, M or SG");
    }
    auto words = operands();
    auto strategy = opt_.strategy == "randomized" ? diamond::Strategy::randomized(opt_.seed)
                                                  : diamond::Strategy::deterministic();
    const rewrite::RelationSystem sys(Calculus::M, opt_.n);
    json list = json::array();
    bool truncated = false;
    for (const auto& w : words) {
      auto trace = diamond::reduce_irreducible(w, budget_, strategy);
      truncated |= trace.truncated;
      if (as_json()) {
        json moves = json::array();
        for (const auto& m : trace.moves) {
          moves.push_back({{"position", m.position + 1}, {"index", m.index},
                           {"order", m.order == diamond::PairOrder::tau_upsilon ? "tu" : "ut"},
                           {"pre_chain", chain_json(m.pre_chain, sys)}});
        }
        list.push_back({{"start", w.to_string()}, {"result", trace.result.to_string()},
                        {"deletions", trace.moves.size()}, {"truncated", trace.truncated},
                        {"moves", moves}});
      } else {
        out_ << trace.result.to_string() << "  (" << trace.moves.size() << " deletion"
             << (trace.moves.size() == 1 ? "" : "s")
             << (trace.truncated ? ", irreducible at budget" : "") << ")\n";
      }
    }
    if (as_json()) {
      auto j = header();
      j["strategy"] = opt_.strategy;
      j["seed"] = opt_.seed;
      j["results"] = list;
      emit(j);
    }
    return truncated ? kInconclusive : kVerdict;
  }

  int closure() {
    auto words = operands(1);
    const rewrite::RelationSystem sys(calc_, opt_.n);
    auto c = rewrite::closure(words[0], sys, budget_);
    if (as_json()) {
      auto j = header();
      j["word"] = words[0].to_string();
      j["max_length"] = c.max_length;
      j["truncated"] = c.truncated;
      json members = json::array();
      for (const auto& m : c.members()) members.push_back(m.to_string());
      j["size"] = c.words.size();
      j["members"] = members;
      emit(j);
    } else {
      for (const auto& m : c.members()) out_ << m.to_string() << "\n";
      out_ << "# " << c.words.size() << " words, max_length " << c.max_length
           << (c.truncated ? ", truncated" : "") << "\n";
    }
    return c.truncated ? kInconclusive : kVerdict;
  }

  void write_csv(const std::string& text) {
    if (opt_.csv_path.empty()) return;
    std::ofstream f(opt_.csv_path);
    f << text;
  }

  int diamond() {
    if (opt_.words.empty()) {
      auto report = experiments::diamond_experiment(opt_.n, opt_.max_len.value_or(4),
                                                    budget_, opt_.jobs);
      write_csv(experiments::to_csv(report));
      if (as_json()) {
        out_ << experiments::to_json(report, opt_.timing);
      } else {
        out_ << "peaks " << report.peaks << " over " << report.peaks_words
             << " words; failures " << report.failures << ", aborts " << report.aborts
             << "\n" << experiments::to_csv(report);
      }
      if (report.aborts) return kViolation;
      return report.failures || report.certificate_errors ? kInconclusive : kVerdict;
    }
    // Single beta: every pair of erasures out of it.
    auto words = operands(1);
    const auto& beta = words[0];
    diamond::MEquality m(opt_.n, budget_);
    auto search = diamond::find_opposite_pairs(beta, budget_);
    // First site for each pair of points.
    std::vector<const diamond::PairSite*> sites;
    std::set<std::pair<int, int>> seen;
    for (const auto& site : search.sites) {
      if (seen.insert(std::minmax(site.points.first, site.points.second)).second) {
        sites.push_back(&site);
      }
    }
    auto points = [](const diamond::PairSite& s) {
      auto [p, q] = std::minmax(s.points.first, s.points.second);
      return json::array({p + 1, q + 1});
    };
    json peaks = json::array();
    bool failed = false;
    for (std::size_t a = 0; a < sites.size(); ++a) {
      for (std::size_t g = a; g < sites.size(); ++g) {
        auto alpha = sites[a]->erased();
        auto gamma = sites[g]->erased();
        auto res = diamond::diamond_check(alpha, beta, gamma,
                                          diamond::inverse(sites[a]->erase_move()),
                                          sites[g]->erase_move(), budget_, &m);
        failed |= res.outcome == diamond::Outcome::failure;
        json p = {{"alpha", alpha.to_string()}, {"gamma", gamma.to_string()},
                  {"alpha_points", points(*sites[a])}, {"gamma_points", points(*sites[g])},
                  {"case", std::string(diamond::to_string(res.peak_case))},
                  {"outcome", std::string(diamond::to_string(res.outcome))}};
        if (res.eta) p["eta"] = res.eta->to_string();
        if (!as_json()) {
          out_ << alpha.to_string() << " <- " << beta.to_string() << " -> "
               << gamma.to_string() << " (points " << p["alpha_points"].dump() << " / "
               << p["gamma_points"].dump() << "): case " << diamond::to_string(res.peak_case)
               << ", " << diamond::to_string(res.outcome)
               << (res.eta ? " via " + res.eta->to_string() : "") << "\n";
        }
        peaks.push_back(std::move(p));
      }
    }
    if (as_json()) {
      auto j = header();
      j["beta"] = beta.to_string();
      j["truncated"] = search.truncated;
      j["peaks"] = peaks;
      emit(j);
    }
    return failed || search.truncated ? kInconclusive : kVerdict;
  }

  int inject() {
    auto report = experiments::injectivity_experiment(opt_.n, opt_.max_len.value_or(3),
                                                      budget_, opt_.jobs, false);
    write_csv(experiments::to_csv(report));
    if (as_json()) {
      out_ << experiments::to_json(report, opt_.timing);
    } else {
      out_ << "words " << report.words << ", SB classes " << report.classes.size()
           << ", pairs " << report.pairs << "\n"
           << "SB-distinct pairs: " << report.cross_class.distinct << " distinct, "
           << report.cross_class.inconclusive << " inconclusive, "
           << report.cross_class.equal << " SG-equal (violations)\n";
    }
    if (!report.violations.empty()) return kViolation;
    return report.cross_class.inconclusive ? kInconclusive : kVerdict;
  }

  const Options& opt_;
  std::ostream& out_;
  Calculus calc_;
  rewrite::Budget budget_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Singular braid workbench"};
  app.add_option("verb", opt.verb, "parse|perm|nf|equal|eta|reduce|diamond|inject|closure")
      ->required()
      ->check(CLI::IsMember(
          {"parse", "perm", "nf", "equal", "eta", "reduce", "diamond", "inject", "closure"}));
  app.add_option("words", opt.words, "braid words, e.g. \"s1 S2 t1 u2\" or \"e\"");
  app.add_option("--calc", opt.calc, "B, SB, M or SG")
      ->check(CLI::IsMember({"B", "SB", "M", "SG"}));
  app.add_option("--n", opt.n, "strand count")->check(CLI::Range(1, max_strands));
  app.add_option("--max-nodes", opt.max_nodes, "search node budget");
  app.add_option("--max-len", opt.max_len,
                 "length cap for searches; enumeration length for inject/diamond");
  app.add_option("--slack", opt.slack, "extra letters allowed over the longest operand");
  app.add_option("--seed", opt.seed, "seed for the randomized strategy");
  app.add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));
  app.add_option("--strategy", opt.strategy)
      ->check(CLI::IsMember({"deterministic", "randomized"}));
  app.add_flag("--timing", opt.timing, "include wall time in experiment JSON");
  app.add_flag("--length-preserving", opt.length_preserving,
               "use only length-preserving rules");
  app.add_option("--csv", opt.csv_path, "write the experiment summary table as CSV");
  app.add_option("--rules-out", opt.rules_out, "write the relation system used");

  std::vector<std::string> argv_storage{"sbraid"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerdict;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Command cmd(opt, out);
    return cmd.run();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const diamond::TheoremViolation& e) {
    err << "THEOREM VIOLATION: " << e.what() << "\n";
    return kViolation;
  }
}

}  // namespace sbraid::cli
