#include "csf/word.hpp"

#include <algorithm>

#include "csf/error.hpp"

namespace csf {

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'x' && c != 'y') fail(Errc::ParseError, "word letters must be 'x' or 'y'");
  }
}

const Word& Word::unit() {
  static const Word u;
  return u;
}

std::size_t Word::y_degree() const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), 'y'));
}

bool Word::is_power_of(char c) const noexcept {
  if (letters_.empty()) return false;
  return letters_.find_first_not_of(c) == std::string::npos;
}

Word Word::concat(const Word& rhs) const { return Word(Unchecked{}, letters_ + rhs.letters_); }

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(Unchecked{}, letters_.substr(pos, len));
}

Word Word::rotated_left(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  return Word(Unchecked{}, letters_.substr(k) + letters_.substr(0, k));
}

std::string Word::text() const { return letters_.empty() ? "1" : letters_; }

bool word_less(const Word& a, const Word& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.letters() < b.letters();  // 'x' < 'y' in ASCII
}

Word parse_word(std::string_view text) {
  if (text == "1") return Word::unit();
  if (text.empty()) fail(Errc::ParseError, "empty word text (the unit is written \"1\")");
  return Word(std::string(text));
}

Word z_word(int k) {
  if (k < 1) fail(Errc::PreconditionViolation, "z_word requires k >= 1");
  std::string s(static_cast<std::size_t>(k - 1), 'x');
  s += 'y';
  return Word(std::move(s));
}

Word letter_power(char c, std::size_t n) { return Word(std::string(n, c)); }

}  // namespace csf
