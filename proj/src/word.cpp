#include "sbraid/word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sbraid {

std::string_view to_string(Calculus c) {
  switch (c) {
    case Calculus::B: return "B";
    case Calculus::SB: return "SB";
    case Calculus::M: return "M";
    case Calculus::SG: return "SG";
  }
  return "?";
}

Calculus parse_calculus(std::string_view text) {
  if (text == "B") return Calculus::B;
  if (text == "SB") return Calculus::SB;
  if (text == "M") return Calculus::M;
  if (text == "SG") return Calculus::SG;
  throw InputError("unknown calculus '" + std::string(text) + "'");
}

namespace {

void check_index(int index) {
  if (index < 1 || index >= max_strands) {
    throw InputError("generator index " + std::to_string(index) +
                     " out of range");
  }
}

}  // namespace

Generator Generator::crossing(int index, Sign sign) {
  check_index(index);
  return Generator(static_cast<std::uint8_t>(
      (index - 1) * 4 + (sign == Sign::negative ? 1 : 0)));
}

Generator Generator::singular(int index, Color color) {
  check_index(index);
  return Generator(static_cast<std::uint8_t>(
      (index - 1) * 4 + (color == Color::white ? 3 : 2)));
}

Sign Generator::sign() const {
  if (is_singular()) throw InputError("singular letter has no sign");
  return (code_ & 1u) ? Sign::negative : Sign::positive;
}

Color Generator::color() const {
  if (is_crossing()) throw InputError("crossing has no colour");
  return (code_ & 1u) ? Color::white : Color::black;
}

std::string Generator::to_string() const {
  static constexpr char prefix[] = {'s', 'S', 't', 'u'};
  return prefix[code_ & 3u] + std::to_string(index());
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<std::uint8_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InputError("not a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::reversal(int n) {
  Permutation p(n);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv(size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv.images_[images_[i]] = static_cast<std::uint8_t>(i);
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

int Permutation::inversions() const {
  int count = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) {
      if (images_[a] > images_[b]) ++count;
    }
  }
  return count;
}

void Permutation::swap_values(int i) {
  for (auto& v : images_) {
    if (v == i) {
      v = static_cast<std::uint8_t>(i + 1);
    } else if (v == i + 1) {
      v = static_cast<std::uint8_t>(i);
    }
  }
}

void Permutation::swap_positions(int i) {
  std::swap(images_[static_cast<std::size_t>(i)],
            images_[static_cast<std::size_t>(i) + 1]);
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw InputError("permutation size mismatch");
  std::vector<std::uint8_t> images(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    images[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(q.at(p.at(i)));
  }
  return Permutation(std::move(images));
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1 || strands > max_strands) {
    throw InputError("strand count " + std::to_string(strands) +
                     " out of range");
  }
}

BraidWord::BraidWord(int strands, std::vector<Generator> letters)
    : BraidWord(strands) {
  for (std::size_t pos = 0; pos < letters.size(); ++pos) {
    if (letters[pos].index() >= strands) {
      throw InputError("letter " + letters[pos].to_string() + " at position " +
                       std::to_string(pos + 1) + " exceeds strand count " +
                       std::to_string(strands));
    }
  }
  letters_ = std::move(letters);
}

BraidWord BraidWord::from_key(int strands, std::string_view key) {
  std::vector<Generator> letters;
  letters.reserve(key.size());
  for (char c : key) {
    letters.push_back(Generator::from_code(static_cast<std::uint8_t>(c)));
  }
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::key() const {
  std::string k;
  k.reserve(letters_.size());
  for (auto g : letters_) k.push_back(static_cast<char>(g.code()));
  return k;
}

std::size_t BraidWord::singular_count() const {
  return static_cast<std::size_t>(std::count_if(
      letters_.begin(), letters_.end(),
      [](Generator g) { return g.is_singular(); }));
}

std::size_t BraidWord::black_count() const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [](Generator g) {
        return g.is_singular() && g.color() == Color::black;
      }));
}

std::size_t BraidWord::white_count() const {
  return singular_count() - black_count();
}

long BraidWord::exponent_sum() const {
  long sum = 0;
  for (auto g : letters_) {
    if (g.is_crossing()) sum += g.sign() == Sign::positive ? 1 : -1;
  }
  return sum;
}

std::string BraidWord::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += letters_[i].to_string();
  }
  return out;
}

bool in_alphabet(const BraidWord& w, Calculus calc) {
  for (auto g : w.letters()) {
    if (!g.is_singular()) continue;
    if (calc == Calculus::B) return false;
    if (calc == Calculus::SB && g.color() == Color::white) return false;
  }
  return true;
}

void require_alphabet(const BraidWord& w, Calculus calc) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    auto g = w[pos];
    if (!g.is_singular()) continue;
    if (calc == Calculus::B ||
        (calc == Calculus::SB && g.color() == Color::white)) {
      throw InputError("letter " + g.to_string() + " at position " +
                       std::to_string(pos + 1) + " is not in the " +
                       std::string(to_string(calc)) + " alphabet");
    }
  }
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) {
    throw InputError("strand count mismatch: " + std::to_string(u.strands()) +
                     " vs " + std::to_string(v.strands()));
  }
  auto letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

Permutation underlying_permutation(const BraidWord& w) {
  // Track which start strand sits at each position, then invert.
  Permutation at_position(w.strands());
  for (auto g : w.letters()) at_position.swap_positions(g.index() - 1);
  return at_position.inverse();
}

namespace {

std::vector<Generator> singular_letters_at(const BraidWord& w, std::size_t p) {
  if (p >= w.size()) {
    throw InputError("position " + std::to_string(p + 1) + " out of range");
  }
  if (!w[p].is_singular()) {
    throw InputError("letter at position " + std::to_string(p + 1) +
                     " is not singular");
  }
  return w.letters();
}

}  // namespace

BraidWord resolve(const BraidWord& w, std::size_t p, Sign s) {
  auto letters = singular_letters_at(w, p);
  letters[p] = Generator::crossing(letters[p].index(), s);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord recolor(const BraidWord& w, std::size_t p, Color c) {
  auto letters = singular_letters_at(w, p);
  letters[p] = Generator::singular(letters[p].index(), c);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord parse_word(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw InputError("empty input (use 'e' for the identity)");
  if (tokens.size() == 1 && tokens[0] == "e") return BraidWord(strands);

  std::vector<Generator> letters;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const auto& tok = tokens[t];
    auto where = " at token " + std::to_string(t + 1);
    bool digits_ok = tok.size() >= 2 && tok[1] >= '1' && tok[1] <= '9' &&
                     std::all_of(tok.begin() + 1, tok.end(), [](char c) {
                       return std::isdigit(static_cast<unsigned char>(c));
                     });
    if (!digits_ok || std::string_view("sStu").find(tok[0]) ==
                          std::string_view::npos) {
      throw InputError("unknown token '" + tok + "'" + where);
    }
    if (tok.size() > 4) throw InputError("index out of range" + where);
    int index = std::stoi(tok.substr(1));
    if (index >= strands) throw InputError("index out of range" + where);
    switch (tok[0]) {
      case 's': letters.push_back(Generator::crossing(index, Sign::positive)); break;
      case 'S': letters.push_back(Generator::crossing(index, Sign::negative)); break;
      case 't': letters.push_back(Generator::singular(index, Color::black)); break;
      default: letters.push_back(Generator::singular(index, Color::white)); break;
    }
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace sbraid
