#include "sbraid/garside.hpp"

#include <algorithm>

namespace sbraid::garside {

PermutationBraid PermutationBraid::generator(int n, int index) {
  if (index < 1 || index >= n) throw InputError("generator index out of range");
  Permutation p(n);
  p.swap_positions(index - 1);
  return PermutationBraid(std::move(p));
}

bool PermutationBraid::is_delta() const {
  return perm_ == Permutation::reversal(perm_.size());
}

std::vector<bool> PermutationBraid::starting_set() const {
  const int n = perm_.size();
  std::vector<bool> set(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 0; i + 1 < n; ++i) {
    set[static_cast<std::size_t>(i)] = perm_.at(i) > perm_.at(i + 1);
  }
  return set;
}

std::vector<bool> PermutationBraid::finishing_set() const {
  const int n = perm_.size();
  auto inv = perm_.inverse();
  std::vector<bool> set(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 0; i + 1 < n; ++i) {
    set[static_cast<std::size_t>(i)] = inv.at(i) > inv.at(i + 1);
  }
  return set;
}

PermutationBraid PermutationBraid::flipped() const {
  const int n = perm_.size();
  std::vector<std::uint8_t> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    images[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(n - 1 - perm_.at(n - 1 - i));
  }
  return PermutationBraid(Permutation(std::move(images)));
}

BraidWord PermutationBraid::to_word() const {
  // Peel off left descents: this = s_i * rest.
  std::vector<Generator> letters;
  Permutation rest = perm_;
  for (bool progress = true; progress;) {
    progress = false;
    for (int i = 0; i + 1 < rest.size(); ++i) {
      if (rest.at(i) > rest.at(i + 1)) {
        letters.push_back(Generator::crossing(i + 1, Sign::positive));
        rest.swap_positions(i);
        progress = true;
        break;
      }
    }
  }
  return BraidWord(strands(), std::move(letters));
}

bool left_weighted(const PermutationBraid& a, const PermutationBraid& b) {
  auto finish = a.finishing_set();
  auto start = b.starting_set();
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (start[i] && !finish[i]) return false;
  }
  return true;
}

namespace {

// Moves generators from the front of b to the back of a until the pair is
// left-weighted. Returns whether anything moved.
bool make_left_weighted(Permutation& a, Permutation& b) {
  bool changed = false;
  const int n = a.size();
  for (bool progress = true; progress;) {
    progress = false;
    auto a_inv = a.inverse();
    for (int i = 0; i + 1 < n; ++i) {
      bool in_start = b.at(i) > b.at(i + 1);
      bool in_finish = a_inv.at(i) > a_inv.at(i + 1);
      if (in_start && !in_finish) {
        a.swap_values(i);
        b.swap_positions(i);
        progress = changed = true;
        break;
      }
    }
  }
  return changed;
}

class Accumulator {
 public:
  explicit Accumulator(int n) : n_(n) {}
  Accumulator(int n, long infimum, const std::vector<PermutationBraid>& factors)
      : n_(n), infimum_(infimum) {
    for (const auto& f : factors) factors_.push_back(f.permutation());
  }

  void append_simple(Permutation x) {
    factors_.push_back(std::move(x));
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = factors_.size() - 1; j-- > 0;) {
        changed |= make_left_weighted(factors_[j], factors_[j + 1]);
      }
    }
    const auto delta = Permutation::reversal(n_);
    while (!factors_.empty() && factors_.front() == delta && n_ > 1) {
      factors_.erase(factors_.begin());
      ++infimum_;
    }
    while (!factors_.empty() && factors_.back().is_identity()) {
      factors_.pop_back();
    }
  }

  // Rewrites Delta^k P Delta^-1 as Delta^{k-1} flip(P).
  void shift_delta_left() {
    for (auto& f : factors_) f = PermutationBraid(f).flipped().permutation();
    --infimum_;
  }

  void append_letter(Generator g) {
    if (n_ == 1) return;
    Permutation x = g.sign() == Sign::positive ? Permutation(n_)
                                               : Permutation::reversal(n_);
    if (g.sign() == Sign::positive) {
      x.swap_positions(g.index() - 1);
    } else {
      shift_delta_left();
      x.swap_values(g.index() - 1);
    }
    append_simple(std::move(x));
  }

  NormalForm finish() const {
    NormalForm nf;
    nf.strands = n_;
    nf.infimum = infimum_;
    for (const auto& f : factors_) nf.factors.emplace_back(f);
    return nf;
  }

  long& infimum() { return infimum_; }

 private:
  int n_;
  long infimum_ = 0;
  std::vector<Permutation> factors_;
};

}  // namespace

std::string NormalForm::to_string() const {
  std::string out = "D^" + std::to_string(infimum);
  for (const auto& f : factors) out += " | " + f.permutation().to_string();
  return out;
}

BraidWord delta_power(int n, long k) {
  auto delta = PermutationBraid::delta(n).to_word().letters();
  std::vector<Generator> letters;
  if (k >= 0) {
    for (long i = 0; i < k; ++i) {
      letters.insert(letters.end(), delta.begin(), delta.end());
    }
  } else {
    for (long i = 0; i < -k; ++i) {
      for (auto it = delta.rbegin(); it != delta.rend(); ++it) {
        letters.push_back(it->opposite());
      }
    }
  }
  return BraidWord(n, std::move(letters));
}

BraidWord NormalForm::to_word() const {
  auto w = delta_power(strands, infimum);
  for (const auto& f : factors) w = concat(w, f.to_word());
  return w;
}

NormalForm normal_form(const BraidWord& w) {
  require_alphabet(w, Calculus::B);
  Accumulator acc(w.strands());
  for (auto g : w.letters()) acc.append_letter(g);
  return acc.finish();
}

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  if (a.strands != b.strands) throw InputError("strand count mismatch");
  std::vector<PermutationBraid> left = a.factors;
  if (b.infimum % 2 != 0) {
    for (auto& f : left) f = f.flipped();
  }
  Accumulator acc(a.strands, a.infimum + b.infimum, left);
  for (const auto& f : b.factors) acc.append_simple(f.permutation());
  if (a.strands == 1) acc.infimum() = 0;
  return acc.finish();
}

bool equal_B(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw InputError("strand count mismatch");
  return normal_form(u) == normal_form(v);
}

}  // namespace sbraid::garside
