#include "csf/poly.hpp"

#include <cctype>
#include <sstream>

#include "csf/error.hpp"

namespace csf {

Poly::Poly(const Word& w, Rat c) {
  c.canonicalize();
  if (c != 0) terms_.emplace(w, std::move(c));
}

const Poly& Poly::zero() {
  static const Poly z;
  return z;
}

const Poly& Poly::unit() {
  static const Poly u{Word::unit()};
  return u;
}

Rat Poly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<std::size_t> Poly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  std::size_t d = terms_.begin()->first.degree();
  for (const auto& [w, c] : terms_)
    if (w.degree() != d) return std::nullopt;
  return d;
}

void Poly::add_term(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, Rat(-c));
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

Poly operator-(Poly a) {
  for (auto& [w, v] : a.terms_) v = -v;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa.concat(wb), Rat(ca * cb));
  return out;
}

Poly concat_product(const Poly& a, const Poly& b) { return a * b; }

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rat a = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << a.get_str() << "*" << w.text();
  }
  return os.str();
}

namespace {

struct PolyParser {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() { return s[i]; }

  // [0-9]+(/[0-9]+)?
  Rat number() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail(Errc::ParseError, "expected a number in poly text");
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == dstart) fail(Errc::ParseError, "expected a denominator in poly text");
    }
    Rat r(std::string(s.substr(start, i - start)));
    r.canonicalize();
    return r;
  }

  Word word() {
    if (i < s.size() && s[i] == '1') {
      ++i;
      return Word::unit();
    }
    std::size_t start = i;
    while (i < s.size() && (s[i] == 'x' || s[i] == 'y')) ++i;
    if (i == start) fail(Errc::ParseError, "expected a word ([xy]+ or 1) in poly text");
    return Word(std::string(s.substr(start, i - start)));
  }

  // [coeff '*'] word   |   coeff
  void term(Poly& out, int sign) {
    skip_ws();
    if (i >= s.size()) fail(Errc::ParseError, "dangling sign in poly text");
    Rat c(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = number();
      have_coeff = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
        out.add_term(word(), Rat(sign * c));
        return;
      }
      // bare rational: coefficient of the unit
      out.add_term(Word::unit(), Rat(sign * c));
      return;
    }
    (void)have_coeff;
    out.add_term(word(), Rat(sign * c));
  }
};

}  // namespace

Poly parse_poly(std::string_view text) {
  PolyParser p{text};
  Poly out;
  p.skip_ws();
  if (p.done()) fail(Errc::ParseError, "empty poly text");
  if (text == "0") return out;
  int sign = 1;
  if (p.peek() == '+' || p.peek() == '-') {
    sign = p.peek() == '-' ? -1 : 1;
    ++p.i;
  }
  p.term(out, sign);
  while (!p.done()) {
    char c = p.peek();
    if (c != '+' && c != '-') fail(Errc::ParseError, "expected '+' or '-' between poly terms");
    ++p.i;
    p.term(out, c == '-' ? -1 : 1);
  }
  return out;
}

}  // namespace csf
