#include "csf/index.hpp"

#include <numeric>
#include <sstream>

#include "csf/error.hpp"

namespace csf {

Index::Index(std::vector<int> p) : parts(std::move(p)) {
  for (int k : parts)
    if (k < 1) fail(Errc::ParseError, "index parts must be positive");
}

int Index::weight() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

Word word_from_index(const Index& idx) {
  std::string s;
  for (int k : idx.parts) {
    s.append(static_cast<std::size_t>(k - 1), 'x');
    s += 'y';
  }
  return Word(std::move(s));
}

Index index_from_word(const Word& w) {
  if (!w.empty() && !w.ends_with('y'))
    fail(Errc::NotInH1, "word '" + w.text() + "' does not end in y");
  std::vector<int> parts;
  int run = 0;
  for (std::size_t i = 0; i < w.degree(); ++i) {
    if (w.at(i) == 'x') {
      ++run;
    } else {
      parts.push_back(run + 1);
      run = 0;
    }
  }
  return Index(std::move(parts));
}

Index parse_index(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && text[j] != ',') ++j;
    std::string piece(text.substr(i, j - i));
    try {
      std::size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size() || v < 1) throw std::invalid_argument(piece);
      parts.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad index part '" + piece + "' (want positive integers)");
    }
    i = j + (j < text.size() ? 1 : 0);
    if (j < text.size() && j + 1 == text.size())
      fail(Errc::ParseError, "trailing comma in index text");
  }
  if (parts.empty()) fail(Errc::ParseError, "empty index text");
  return Index(std::move(parts));
}

std::string to_string(const Index& idx) {
  std::ostringstream os;
  for (std::size_t i = 0; i < idx.parts.size(); ++i) {
    if (i) os << ",";
    os << idx.parts[i];
  }
  return os.str();
}

std::vector<Index> compositions_of(int weight) {
  std::vector<Index> out;
  if (weight < 0) return out;
  if (weight == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(Index(cur));
      return;
    }
    for (int k = 1; k <= rest; ++k) {
      cur.push_back(k);
      self(self, rest - k);
      cur.pop_back();
    }
  };
  rec(rec, weight);
  return out;
}

}  // namespace csf
