#include "sbraid/desingular.hpp"

namespace sbraid::desingular {

FormalSum FormalSum::single(Term term, long coeff) {
  FormalSum s;
  s.add(term, coeff);
  return s;
}

FormalSum FormalSum::one(int strands) {
  garside::NormalForm id;
  id.strands = strands;
  return single(Term{0, 0, id});
}

void FormalSum::add(const Term& term, long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(term, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [term, coeff] : other.terms_) add(term, coeff);
  return *this;
}

FormalSum operator-(FormalSum a, const FormalSum& b) {
  for (const auto& [term, coeff] : b.terms_) a.add(term, -coeff);
  return a;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      out.add(Term{ta.black + tb.black, ta.white + tb.white,
                   garside::multiply(ta.braid, tb.braid)},
              ca * cb);
    }
  }
  return out;
}

bool FormalSum::homogeneous(int black, int white) const {
  for (const auto& [term, coeff] : terms_) {
    if (term.black != black || term.white != white) return false;
  }
  return true;
}

std::string FormalSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [term, coeff] : terms_) {
    if (first) {
      out += coeff < 0 ? "-" : "+";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    first = false;
    out += std::to_string(coeff < 0 ? -coeff : coeff) + "·";
    if (term.black || term.white) {
      out += "x^" + std::to_string(term.black) + " y^" +
             std::to_string(term.white) + "·";
    }
    out += term.braid.to_string();
  }
  return out;
}

namespace {

FormalSum crossing_image(int n, Generator g) {
  return FormalSum::single(
      Term{0, 0, garside::normal_form(BraidWord(n, {g}))});
}

FormalSum desingularize(const BraidWord& w, bool graded) {
  const int n = w.strands();
  FormalSum acc = FormalSum::one(n);
  for (auto g : w.letters()) {
    if (g.is_crossing()) {
      acc = acc * crossing_image(n, g);
      continue;
    }
    const int i = g.index();
    const bool black = g.color() == Color::black;
    const int dx = graded && black ? 1 : 0;
    const int dy = graded && !black ? 1 : 0;
    FormalSum image;
    image.add(Term{dx, dy, garside::normal_form(BraidWord(n, {Generator::crossing(i, Sign::positive)}))}, 1);
    image.add(Term{dx, dy, garside::normal_form(BraidWord(n, {Generator::crossing(i, Sign::negative)}))}, -1);
    acc = acc * image;
  }
  return acc;
}

}  // namespace

FormalSum eta(const BraidWord& w) {
  require_alphabet(w, Calculus::SB);
  return desingularize(w, false);
}

FormalSum eta2(const BraidWord& w) { return desingularize(w, true); }

bool oracle_equal_SB(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands()) throw InputError("strand count mismatch");
  return eta(u) == eta(v);
}

}  // namespace sbraid::desingular
