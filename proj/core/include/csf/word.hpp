#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace csf {

// A monomial of the free algebra Q<x,y>: a finite word over {x, y}.
// Words are immutable values; the empty word is the unit and prints as "1".
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters);  // validates that letters are all 'x'/'y'

  static const Word& unit();

  std::size_t degree() const noexcept { return letters_.size(); }
  std::size_t y_degree() const noexcept;
  bool empty() const noexcept { return letters_.empty(); }
  char at(std::size_t i) const { return letters_[i]; }
  const std::string& letters() const noexcept { return letters_; }

  bool starts_with(char c) const noexcept { return !letters_.empty() && letters_.front() == c; }
  bool ends_with(char c) const noexcept { return !letters_.empty() && letters_.back() == c; }
  bool is_power_of(char c) const noexcept;  // nonempty and all letters equal c

  Word concat(const Word& rhs) const;
  Word subword(std::size_t pos, std::size_t len) const;
  Word rotated_left(std::size_t k) const;

  // "1" for the unit, the raw letters otherwise.
  std::string text() const;

  friend bool operator==(const Word& a, const Word& b) noexcept { return a.letters_ == b.letters_; }

 private:
  struct Unchecked {};
  Word(Unchecked, std::string s) : letters_(std::move(s)) {}

  std::string letters_;
};

// Canonical monomial order: by degree, then lexicographic with x < y.
bool word_less(const Word& a, const Word& b) noexcept;

struct WordOrder {
  bool operator()(const Word& a, const Word& b) const noexcept { return word_less(a, b); }
};

// Accepts "[xy]+" or the literal "1".
Word parse_word(std::string_view text);

// x^(k-1) y, the letter-word encoding of the exponent k >= 1.
Word z_word(int k);

// Concatenation of letters c repeated n times.
Word letter_power(char c, std::size_t n);

}  // namespace csf
