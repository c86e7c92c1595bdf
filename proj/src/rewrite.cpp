#include "sbraid/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace sbraid::rewrite {

std::string_view to_string(Family f) {
  static constexpr std::string_view names[] = {"R1", "R2", "R3", "R4",
                                               "R5", "R6", "R7", "R8"};
  return names[static_cast<int>(f) - 1];
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::equal: return "equal";
    case Status::distinct: return "distinct";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

Generator x(int i, Sign e) { return Generator::crossing(i, e); }
Generator t(int i, Color c) { return Generator::singular(i, c); }
Sign flip(Sign e) { return e == Sign::positive ? Sign::negative : Sign::positive; }

constexpr Sign signs[] = {Sign::positive, Sign::negative};

std::string pack(const std::vector<Generator>& letters) {
  std::string k;
  for (auto g : letters) k.push_back(static_cast<char>(g.code()));
  return k;
}

std::string spell(int strands, const std::string& key) {
  return BraidWord::from_key(strands, key).to_string();
}

}  // namespace

RelationSystem::RelationSystem(Calculus calc, int strands)
    : calc_(calc), strands_(strands) {
  if (strands < 1 || strands > max_strands) {
    throw InputError("strand count out of range");
  }
  const int top = strands - 1;  // largest generator index
  std::vector<Color> colors;
  if (calc == Calculus::SB) colors = {Color::black};
  if (calc == Calculus::M || calc == Calculus::SG) {
    colors = {Color::black, Color::white};
  }

  for (int i = 1; i <= top; ++i) {
    for (auto e : signs) add(Family::R1, {x(i, e), x(i, flip(e))}, {});
  }
  for (int i = 1; i <= top; ++i) {
    for (int j = i + 2; j <= top; ++j) {
      for (auto e : signs) {
        for (auto f : signs) {
          add(Family::R2, {x(i, e), x(j, f)}, {x(j, f), x(i, e)});
        }
      }
    }
  }
  for (int a = 1; a < top; ++a) {
    const int b = a + 1;
    for (auto e : signs) {
      add(Family::R3, {x(a, e), x(b, e), x(a, e)}, {x(b, e), x(a, e), x(b, e)});
    }
    for (auto e : signs) {
      for (auto f : signs) {
        add(Family::R3, {x(a, e), x(b, f), x(a, flip(e))},
            {x(b, flip(e)), x(a, f), x(b, e)});
      }
    }
  }
  for (auto c : colors) {
    for (int i = 1; i <= top; ++i) {
      for (int j = 1; j <= top; ++j) {
        if (std::abs(i - j) < 2) continue;
        for (auto e : signs) add(Family::R4, {x(i, e), t(j, c)}, {t(j, c), x(i, e)});
      }
    }
  }
  for (auto c : colors) {
    for (auto d : colors) {
      for (int i = 1; i <= top; ++i) {
        for (int j = i + 2; j <= top; ++j) {
          add(Family::R5, {t(i, c), t(j, d)}, {t(j, d), t(i, c)});
        }
      }
    }
  }
  for (auto c : colors) {
    for (int i = 1; i <= top; ++i) {
      for (auto e : signs) add(Family::R6, {x(i, e), t(i, c)}, {t(i, c), x(i, e)});
    }
  }
  for (auto c : colors) {
    for (int a = 1; a < top; ++a) {
      const int b = a + 1;
      for (auto e : signs) {
        add(Family::R7, {x(a, e), x(b, e), t(a, c)}, {t(b, c), x(a, e), x(b, e)});
        add(Family::R7, {x(b, e), x(a, e), t(b, c)}, {t(a, c), x(b, e), x(a, e)});
        add(Family::R7, {x(a, e), t(b, c), x(a, flip(e))},
            {x(b, flip(e)), t(a, c), x(b, e)});
      }
    }
  }
  if (calc == Calculus::SG) {
    for (int i = 1; i <= top; ++i) {
      add(Family::R8, {t(i, Color::black), t(i, Color::white)}, {});
      add(Family::R8, {t(i, Color::white), t(i, Color::black)}, {});
    }
  }
  index();
}

void RelationSystem::add(Family f, std::vector<Generator> left,
                         std::vector<Generator> right) {
  RewriteRule rule{f, pack(left), pack(right), {}};
  std::vector<std::uint8_t> ls, rs;
  for (std::size_t k = 0; k < left.size(); ++k) {
    if (left[k].is_singular()) ls.push_back(static_cast<std::uint8_t>(k));
  }
  for (std::size_t k = 0; k < right.size(); ++k) {
    if (right[k].is_singular()) rs.push_back(static_cast<std::uint8_t>(k));
  }
  if (ls.size() == 1 && rs.size() == 1) {
    rule.singular_map.emplace_back(ls[0], rs[0]);
  } else if (ls.size() == rs.size()) {
    for (auto l : ls) {
      for (auto r : rs) {
        if (left[l] == right[r]) rule.singular_map.emplace_back(l, r);
      }
    }
  }
  rules_.push_back(std::move(rule));
}

void RelationSystem::index() {
  by_first_.assign(256, {});
  insertions_.clear();
  for (std::uint32_t id = 0; id < rules_.size(); ++id) {
    for (bool forward : {true, false}) {
      Step s{id, forward, 0};
      const auto& src = from(s);
      if (src.empty()) {
        insertions_.push_back(s);
        for (auto& list : by_first_) list.push_back(s);
      } else {
        by_first_[static_cast<std::uint8_t>(src[0])].push_back(s);
      }
    }
  }
}

std::string RelationSystem::describe(const Step& s) const {
  return std::string(to_string(rules_[s.rule].family)) + " " +
         spell(strands_, from(s)) + " -> " + spell(strands_, to(s));
}

std::string RelationSystem::to_rules_text() const {
  std::ostringstream out;
  out << "# calculus " << sbraid::to_string(calc_) << " n=" << strands_ << "\n";
  for (const auto& r : rules_) {
    out << to_string(r.family) << ": " << spell(strands_, r.left) << " = "
        << spell(strands_, r.right) << "\n";
  }
  return out.str();
}

std::vector<RuleLine> parse_rules_text(std::string_view text, int strands) {
  std::vector<RuleLine> lines;
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    auto eq = line.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon) {
      throw InputError("malformed rule at line " + std::to_string(lineno));
    }
    auto name = line.substr(0, colon);
    Family fam{};
    bool found = false;
    for (int k = 1; k <= 8; ++k) {
      if (to_string(static_cast<Family>(k)) == name) {
        fam = static_cast<Family>(k);
        found = true;
      }
    }
    if (!found) throw InputError("unknown rule family at line " + std::to_string(lineno));
    lines.push_back({fam, parse_word(line.substr(colon + 1, eq - colon - 1), strands),
                     parse_word(line.substr(eq + 1), strands)});
  }
  return lines;
}

namespace {

// Calls f(step, result_key) for every one-step rewrite of key whose result
// fits in cap letters.
template <typename F>
void for_each_move(const std::string& key, const RelationSystem& sys,
                   std::size_t cap, bool length_preserving_only, F&& f) {
  const std::size_t len = key.size();
  for (std::size_t pos = 0; pos <= len; ++pos) {
    const auto& cands =
        pos < len ? sys.candidates(static_cast<std::uint8_t>(key[pos]))
                  : sys.insertions();
    for (const auto& oriented : cands) {
      const auto& src = sys.from(oriented);
      const auto& dst = sys.to(oriented);
      if (length_preserving_only && src.size() != dst.size()) continue;
      if (pos + src.size() > len) continue;
      if (len - src.size() + dst.size() > cap) continue;
      if (key.compare(pos, src.size(), src) != 0) continue;
      std::string result;
      result.reserve(len - src.size() + dst.size());
      result.append(key, 0, pos);
      result.append(dst);
      result.append(key, pos + src.size(), std::string::npos);
      f(Step{oriented.rule, oriented.forward, pos}, std::move(result));
    }
  }
}

void check_operand(const BraidWord& w, const RelationSystem& sys) {
  if (w.strands() != sys.strands()) {
    throw InputError("word has " + std::to_string(w.strands()) +
                     " strands, system has " + std::to_string(sys.strands()));
  }
  require_alphabet(w, sys.calculus());
}

}  // namespace

std::vector<Application> applicable_moves(const BraidWord& w,
                                          const RelationSystem& sys) {
  check_operand(w, sys);
  std::vector<Application> out;
  for_each_move(w.key(), sys, static_cast<std::size_t>(-1), false,
                [&](Step s, std::string&& result) {
                  out.push_back({s, BraidWord::from_key(w.strands(), result)});
                });
  return out;
}

BraidWord apply(const BraidWord& w, const Step& s, const RelationSystem& sys) {
  const auto key = w.key();
  const auto& src = sys.from(s);
  if (s.rule >= sys.rules().size() || s.position + src.size() > key.size() ||
      key.compare(s.position, src.size(), src) != 0) {
    throw InputError("rule " + sys.describe(s) + " does not apply at position " +
                     std::to_string(s.position + 1) + " of " + w.to_string());
  }
  std::string result = key.substr(0, s.position) + sys.to(s) +
                       key.substr(s.position + src.size());
  return BraidWord::from_key(w.strands(), result);
}

BraidWord replay(const BraidWord& w, const Chain& chain,
                 const RelationSystem& sys) {
  BraidWord cur = w;
  for (const auto& s : chain) cur = apply(cur, s, sys);
  return cur;
}

Chain reversed(const Chain& chain) {
  Chain out;
  out.reserve(chain.size());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    out.push_back(it->reversed());
  }
  return out;
}

std::vector<int> track(const std::vector<int>& ids, const Step& s,
                       const RelationSystem& sys) {
  const auto& src = sys.from(s);
  const auto& dst = sys.to(s);
  const auto& rule = sys.rule(s.rule);
  std::vector<int> out(ids.begin(), ids.begin() + static_cast<long>(s.position));
  std::vector<int> middle(dst.size(), -1);
  for (auto [l, r] : rule.singular_map) {
    auto from_off = s.forward ? l : r;
    auto to_off = s.forward ? r : l;
    middle[to_off] = ids[s.position + from_off];
  }
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), ids.begin() + static_cast<long>(s.position + src.size()),
             ids.end());
  return out;
}

Chain Closure::chain_to(std::size_t i) const {
  Chain chain;
  for (auto cur = static_cast<std::int64_t>(i); parent[static_cast<std::size_t>(cur)] >= 0;
       cur = parent[static_cast<std::size_t>(cur)]) {
    chain.push_back(via[static_cast<std::size_t>(cur)]);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<BraidWord> Closure::members() const {
  std::vector<BraidWord> out;
  out.reserve(words.size());
  for (const auto& k : words) out.push_back(BraidWord::from_key(strands, k));
  return out;
}

namespace {

// Shared BFS driver. Stops early when `target` is discovered.
Closure explore(const BraidWord& u, const RelationSystem& sys, std::size_t cap,
                const Budget& budget, const std::string* target,
                bool* found) {
  Closure c;
  c.strands = u.strands();
  c.max_length = cap;
  auto root = u.key();
  c.words.push_back(root);
  c.parent.push_back(-1);
  c.via.push_back(Step{});
  c.index.emplace(root, 0);
  if (target && *target == root) {
    *found = true;
    return c;
  }
  for (std::size_t head = 0; head < c.words.size(); ++head) {
    bool stop = false;
    const std::string cur = c.words[head];
    for_each_move(cur, sys, cap, budget.length_preserving_only,
                  [&](Step s, std::string&& result) {
                    if (stop || c.index.count(result)) return;
                    if (c.words.size() >= budget.max_nodes) {
                      c.truncated = true;
                      stop = true;
                      return;
                    }
                    c.index.emplace(result, c.words.size());
                    c.parent.push_back(static_cast<std::int64_t>(head));
                    c.via.push_back(s);
                    c.words.push_back(std::move(result));
                    if (target && c.words.back() == *target) {
                      *found = true;
                      stop = true;
                    }
                  });
    if (stop) break;
  }
  return c;
}

}  // namespace

Closure closure(const BraidWord& u, const RelationSystem& sys,
                const Budget& budget) {
  check_operand(u, sys);
  return explore(u, sys, budget.cap_for(u.size()), budget, nullptr, nullptr);
}

std::optional<std::string> separating_invariant(const BraidWord& u,
                                                const BraidWord& v,
                                                Calculus calc) {
  if (underlying_permutation(u) != underlying_permutation(v)) {
    return "permutation";
  }
  if (calc == Calculus::SG) {
    auto balance = [](const BraidWord& w) {
      return static_cast<long>(w.black_count()) - static_cast<long>(w.white_count());
    };
    if (balance(u) != balance(v)) return "colour-balance";
  } else if (u.black_count() != v.black_count() ||
             u.white_count() != v.white_count()) {
    return "colour-count";
  }
  if (u.exponent_sum() != v.exponent_sum()) return "exponent-sum";
  return std::nullopt;
}

Verdict bfs_equal(const BraidWord& u, const BraidWord& v,
                  const RelationSystem& sys, const Budget& budget) {
  check_operand(u, sys);
  check_operand(v, sys);
  Verdict verdict;
  verdict.max_length = budget.cap_for(std::max(u.size(), v.size()));
  verdict.max_nodes = budget.max_nodes;
  if (u == v) {
    verdict.status = Status::equal;
    verdict.witness = Chain{};
    verdict.method = "identical";
    verdict.nodes = 1;
    return verdict;
  }
  if (budget.use_invariants) {
    if (auto inv = separating_invariant(u, v, sys.calculus())) {
      verdict.status = Status::distinct;
      verdict.method = "invariant:" + *inv;
      return verdict;
    }
  }
  const auto target = v.key();
  bool found = false;
  auto c = explore(u, sys, verdict.max_length, budget, &target, &found);
  verdict.nodes = c.words.size();
  verdict.method = "closure";
  if (found) {
    verdict.status = Status::equal;
    verdict.witness = c.chain_to(c.index.at(target));
  } else {
    verdict.status = c.truncated ? Status::inconclusive : Status::distinct;
  }
  return verdict;
}

EquivalenceCache::EquivalenceCache(const RelationSystem& sys, Budget budget)
    : sys_(&sys), budget_(budget) {}

const EquivalenceCache::Component* EquivalenceCache::component_of(
    const BraidWord& u, std::size_t cap) {
  auto& members = member_of_[cap];
  auto key = u.key();
  if (auto it = members.find(key); it != members.end()) {
    return &components_[it->second];
  }
  auto c = explore(u, *sys_, cap, budget_, nullptr, nullptr);
  if (c.truncated) return nullptr;
  const std::size_t id = components_.size();
  for (const auto& w : c.words) members.emplace(w, id);
  components_.push_back(Component{std::move(c)});
  return &components_.back();
}

Verdict EquivalenceCache::equal(const BraidWord& u, const BraidWord& v) {
  check_operand(u, *sys_);
  check_operand(v, *sys_);
  if (u == v || (budget_.use_invariants &&
                 separating_invariant(u, v, sys_->calculus()))) {
    return bfs_equal(u, v, *sys_, budget_);
  }
  const auto cap = budget_.cap_for(std::max(u.size(), v.size()));
  const Component* comp = component_of(u, cap);
  if (!comp) return bfs_equal(u, v, *sys_, budget_);
  Verdict verdict;
  verdict.max_length = cap;
  verdict.max_nodes = budget_.max_nodes;
  verdict.method = "closure";
  verdict.nodes = comp->closure.words.size();
  const auto& index = comp->closure.index;
  auto vit = index.find(v.key());
  if (vit == index.end()) {
    verdict.status = Status::distinct;
    return verdict;
  }
  verdict.status = Status::equal;
  Chain chain = reversed(comp->closure.chain_to(index.at(u.key())));
  auto tail = comp->closure.chain_to(vit->second);
  chain.insert(chain.end(), tail.begin(), tail.end());
  verdict.witness = std::move(chain);
  return verdict;
}

}  // namespace sbraid::rewrite
