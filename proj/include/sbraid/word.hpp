#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sbraid {

// Raised for any operand that violates a documented precondition: bad strand
// counts, out-of-range indices, letters outside the declared alphabet, and
// malformed word text.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Kind : std::uint8_t { crossing, singular };
enum class Sign : std::uint8_t { positive, negative };
enum class Color : std::uint8_t { black, white };

// The four calculi share one syntax; they differ in which letters are legal
// and in which relations hold.
enum class Calculus : std::uint8_t { B, SB, M, SG };

std::string_view to_string(Calculus c);
Calculus parse_calculus(std::string_view text);

// Largest supported strand count. Letters are packed into one byte.
inline constexpr int max_strands = 64;

// One letter: sigma_i^{+-1} or a black/white singular point at strand i.
//
// The packed code is (i - 1) * 4 + attr with attr 0 = sigma, 1 = sigma^-1,
// 2 = tau (black), 3 = upsilon (white). Codes order letters first by index,
// then by attribute; this is the fixed letter ordering used for
// deterministic enumeration everywhere.
class Generator {
 public:
  static Generator crossing(int index, Sign sign);
  static Generator singular(int index, Color color);
  static Generator from_code(std::uint8_t code) { return Generator(code); }

  Kind kind() const { return (code_ & 2u) ? Kind::singular : Kind::crossing; }
  bool is_singular() const { return kind() == Kind::singular; }
  bool is_crossing() const { return kind() == Kind::crossing; }
  int index() const { return code_ / 4 + 1; }
  Sign sign() const;
  Color color() const;
  std::uint8_t code() const { return code_; }

  // sigma_i <-> sigma_i^-1, tau_i <-> upsilon_i.
  Generator opposite() const { return Generator(code_ ^ 1u); }

  std::string to_string() const;

  auto operator<=>(const Generator&) const = default;

 private:
  explicit Generator(std::uint8_t code) : code_(code) {}
  std::uint8_t code_;
};

// A permutation of {1..n} stored 0-based as the image of each strand start:
// at(i) is the final position of the strand that started at position i.
class Permutation {
 public:
  explicit Permutation(int n = 0);
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(int n) { return Permutation(n); }
  // Order-reversing permutation i -> n - 1 - i.
  static Permutation reversal(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int at(int i) const { return images_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint8_t> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int inversions() const;

  // Swap the values i and i+1 (0-based): composition with the transposition
  // applied after this permutation.
  void swap_values(int i);
  // Swap the entries at positions i and i+1 (0-based): composition with the
  // transposition applied before this permutation.
  void swap_positions(int i);

  // One-line notation with 1-based values, comma separated: "3,2,1".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::uint8_t> images_;
};

// Left-to-right composition: (p * q) sends i to q(p(i)), i.e. "p then q".
Permutation operator*(const Permutation& p, const Permutation& q);

class BraidWord {
 public:
  explicit BraidWord(int strands = 1);
  BraidWord(int strands, std::vector<Generator> letters);

  // Rebuild from the packed key produced by key(); indices are validated.
  static BraidWord from_key(int strands, std::string_view key);

  int strands() const { return strands_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Generator>& letters() const { return letters_; }
  const Generator& operator[](std::size_t pos) const { return letters_[pos]; }

  // One byte per letter; the canonical hashable identity of a word.
  std::string key() const;

  std::size_t singular_count() const;
  std::size_t black_count() const;
  std::size_t white_count() const;
  // Sum of crossing signs.
  long exponent_sum() const;

  // Canonical spelling: "s1 S2 t1 u2", or "e" for the empty word.
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Generator> letters_;
};

// True when every letter of w is legal in calc.
bool in_alphabet(const BraidWord& w, Calculus calc);
// Throws InputError naming the offending letter.
void require_alphabet(const BraidWord& w, Calculus calc);

BraidWord concat(const BraidWord& u, const BraidWord& v);

Permutation underlying_permutation(const BraidWord& w);

// Replace the singular letter at 0-based position p by a crossing of the
// given sign, or recolour it.
BraidWord resolve(const BraidWord& w, std::size_t p, Sign s);
BraidWord recolor(const BraidWord& w, std::size_t p, Color c);

// Parses the text syntax: 'e' or whitespace-separated tokens [sStu][1-9][0-9]*.
// Errors report the 1-based token position.
BraidWord parse_word(std::string_view text, int strands);

}  // namespace sbraid
