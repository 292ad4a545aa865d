#include "csf/tensor.hpp"

#include "csf/enumeration.hpp"
#include "csf/error.hpp"
#include "csf/maps.hpp"

namespace csf {

Tensor::Tensor(int rank) : rank_(rank) {
  if (rank < 2) fail(Errc::PreconditionViolation, "tensor rank must be >= 2");
}

void Tensor::add_term(const Slots& slots, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(slots.size()) != rank_)
    fail(Errc::PreconditionViolation, "tensor term has wrong number of slots");
  auto [it, inserted] = terms_.emplace(slots, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
  if (rhs.rank_ != rank_) fail(Errc::PreconditionViolation, "tensor rank mismatch");
  for (const auto& [slots, c] : rhs.terms_) add_term(slots, c);
  return *this;
}

Tensor& Tensor::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [slots, v] : terms_) v *= c;
  return *this;
}

namespace {

enum class Slot { First, Last };
enum class Side { Left, Right };

Tensor slot_action(const Poly& a, const Tensor& t, Slot slot, Side side) {
  Tensor out(t.rank());
  for (const auto& [slots, c] : t.terms()) {
    for (const auto& [w, cw] : a.terms()) {
      Tensor::Slots s = slots;
      Word& target = (slot == Slot::First) ? s.front() : s.back();
      target = (side == Side::Left) ? w.concat(target) : target.concat(w);
      out.add_term(s, Rat(c * cw));
    }
  }
  return out;
}

}  // namespace

Tensor diamond_left(const Poly& a, const Tensor& t) {
  return slot_action(a, t, Slot::Last, Side::Left);
}

Tensor diamond_right(const Tensor& t, const Poly& b) {
  return slot_action(b, t, Slot::First, Side::Right);
}

Tensor outer_left(const Poly& a, const Tensor& t) {
  return slot_action(a, t, Slot::First, Side::Left);
}

Tensor outer_right(const Tensor& t, const Poly& b) {
  return slot_action(b, t, Slot::Last, Side::Right);
}

Poly multiply_out(const Tensor& t) {
  Poly out;
  for (const auto& [slots, c] : t.terms()) {
    Word w;
    for (const Word& s : slots) w = w.concat(s);
    out.add_term(w, c);
  }
  return out;
}

namespace {

// sgn(letter) * (x (x+y)^(x(n-1)) y), expanded into word tuples
Tensor letter_value_wide(int n, char letter) {
  Tensor t(n + 1);
  Rat sign(letter == 'x' ? 1 : -1);
  const Word x{std::string("x")};
  const Word yw{std::string("y")};
  // middle slots range independently over {x, y}
  std::vector<Word> middles = enumerate_words(1, WordSpace::H);
  Tensor::Slots slots(static_cast<std::size_t>(n + 1));
  slots.front() = x;
  slots.back() = yw;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      t.add_term(slots, sign);
      return;
    }
    for (const Word& m : middles) {
      slots[static_cast<std::size_t>(pos)] = m;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
  return t;
}

// sgn(letter) * (x y^(xn))
Tensor letter_value_narrow(int n, char letter) {
  Tensor t(n + 1);
  Tensor::Slots slots(static_cast<std::size_t>(n + 1), Word{std::string("y")});
  slots.front() = Word{std::string("x")};
  t.add_term(slots, Rat(letter == 'x' ? 1 : -1));
  return t;
}

enum class LeibnizKind { Inner, InnerTwisted, Outer };

// T(w w') = T(w) . w'  +  w . T(w'), recursing on the first letter.
// Inner uses the diamond action; InnerTwisted additionally maps the
// passive factor through gamma^{-1}; Outer uses the outer action.
Tensor leibniz_word(int n, const Word& w, LeibnizKind kind) {
  Tensor zero(n + 1);
  if (w.empty()) return zero;

  auto letter_value = [&](char c) {
    return kind == LeibnizKind::InnerTwisted ? letter_value_narrow(n, c)
                                             : letter_value_wide(n, c);
  };
  if (w.degree() == 1) return letter_value(w.at(0));

  Word head = w.subword(0, 1);
  Word rest = w.subword(1, w.degree() - 1);
  Poly head_passive{head};
  Poly rest_passive{rest};
  if (kind == LeibnizKind::InnerTwisted) {
    head_passive = apply_automorphism(Automorphism::GammaInv, head_passive);
    rest_passive = apply_automorphism(Automorphism::GammaInv, rest_passive);
  }

  Tensor left = leibniz_word(n, head, kind);   // T(head) . rest
  Tensor right = leibniz_word(n, rest, kind);  // head . T(rest)
  if (kind == LeibnizKind::Outer)
    return outer_right(left, rest_passive) + outer_left(head_passive, right);
  return diamond_right(left, rest_passive) + diamond_left(head_passive, right);
}

Tensor leibniz(int n, const Poly& p, LeibnizKind kind) {
  if (n < 1) fail(Errc::PreconditionViolation, "tensor maps require n >= 1");
  Tensor out(n + 1);
  for (const auto& [w, c] : p.terms()) {
    Tensor t = leibniz_word(n, w, kind);
    t *= c;
    out += t;
  }
  return out;
}

}  // namespace

Tensor cyclic_tensor(int n, const Poly& p) { return leibniz(n, p, LeibnizKind::Inner); }

Tensor cyclic_tensor_mzsv(int n, const Poly& p) {
  return leibniz(n, p, LeibnizKind::InnerTwisted);
}

Tensor derivation_tensor(int n, const Poly& p) { return leibniz(n, p, LeibnizKind::Outer); }

}  // namespace csf
