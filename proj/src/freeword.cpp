#include "dessins/freeword.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

#include "dessins/errors.hpp"

namespace dessins {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw std::overflow_error("matrix entry overflow");
  }
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw std::overflow_error("matrix entry overflow");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw std::overflow_error("matrix entry overflow");
  }
  return r;
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

char letter_char(Letter l) { return l == Letter::A ? 'A' : 'B'; }

// The k with |x - 2ky| < |y|; unique when x is odd and y is even, nonzero.
std::int64_t balanced_quotient(std::int64_t x, std::int64_t y) {
  const std::int64_t two_y = checked_mul(2, y);
  std::int64_t k = x / two_y;
  const std::int64_t r = x - k * two_y;
  if (std::llabs(r) > std::llabs(y)) k += ((r > 0) == (y > 0)) ? 1 : -1;
  return k;
}

}  // namespace

Word Word::letter(Letter l, std::int64_t exponent) {
  Word w;
  w.append(l, exponent);
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const Syllable& s : syllables) w.append(s.letter, s.exponent);
  return w;
}

void Word::append(Letter l, std::int64_t exponent) {
  if (exponent == 0) return;
  if (!syllables_.empty() && syllables_.back().letter == l) {
    syllables_.back().exponent = checked_add(syllables_.back().exponent, exponent);
    if (syllables_.back().exponent == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({l, exponent});
}

std::uint64_t Word::length() const noexcept {
  std::uint64_t total = 0;
  for (const Syllable& s : syllables_) total += std::llabs(s.exponent);
  return total;
}

Word invert(const Word& w) {
  Word out;
  const auto syl = w.syllables();
  for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
    out.append(it->letter, -it->exponent);
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  for (const Syllable& s : v.syllables()) out.append(s.letter, s.exponent);
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("word: " + what + " at offset " + std::to_string(i) +
                     " in \"" + std::string(text) + "\"");
  };
  auto skip_space = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };

  skip_space();
  while (i < text.size()) {
    const char ch = text[i];
    Letter l;
    std::int64_t sign;
    switch (ch) {
      case 'A': l = Letter::A; sign = 1; break;
      case 'a': l = Letter::A; sign = -1; break;
      case 'B': l = Letter::B; sign = 1; break;
      case 'b': l = Letter::B; sign = -1; break;
      default: fail(std::string("unexpected character '") + ch + "'");
    }
    ++i;
    skip_space();
    std::int64_t exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      const char* first = text.data() + i;
      const char* last = text.data() + text.size();
      if (first != last && *first == '+') ++first;
      const auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc{}) fail("expected integer exponent after '^'");
      i = static_cast<std::size_t>(ptr - text.data());
      if (exponent == 0) fail("zero exponent");
    }
    w.append(l, sign * exponent);
    skip_space();
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += letter_char(s.letter);
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

ProjMatrix::ProjMatrix(std::int64_t a, std::int64_t b, std::int64_t c,
                       std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (checked_sub(checked_mul(a, d), checked_mul(b, c)) != 1) {
    throw InvariantError("matrix (" + std::to_string(a) + " " +
                         std::to_string(b) + "; " + std::to_string(c) + " " +
                         std::to_string(d) + ") does not have determinant 1");
  }
  if (c_ < 0 || (c_ == 0 && a_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y) {
  return ProjMatrix(
      checked_add(checked_mul(x.a_, y.a_), checked_mul(x.b_, y.c_)),
      checked_add(checked_mul(x.a_, y.b_), checked_mul(x.b_, y.d_)),
      checked_add(checked_mul(x.c_, y.a_), checked_mul(x.d_, y.c_)),
      checked_add(checked_mul(x.c_, y.b_), checked_mul(x.d_, y.d_)));
}

ProjMatrix inverse(const ProjMatrix& m) {
  return ProjMatrix(m.d(), -m.b(), -m.c(), m.a());
}

ProjMatrix generator_matrix(Letter l) {
  return l == Letter::A ? ProjMatrix(1, 2, 0, 1) : ProjMatrix(1, 0, 2, 1);
}

bool is_identity_mod(const ProjMatrix& m, std::int64_t modulus) {
  if (mod(m.b(), modulus) != 0 || mod(m.c(), modulus) != 0) return false;
  const std::int64_t a = mod(m.a(), modulus);
  const std::int64_t d = mod(m.d(), modulus);
  const std::int64_t one = mod(1, modulus);
  const std::int64_t minus_one = mod(-1, modulus);
  return (a == one && d == one) || (a == minus_one && d == minus_one);
}

ProjMatrix eval(const Word& w) {
  ProjMatrix result;
  for (const Syllable& s : w.syllables()) {
    const std::int64_t twice_k = checked_mul(2, s.exponent);
    const ProjMatrix power = s.letter == Letter::A
                                 ? ProjMatrix(1, twice_k, 0, 1)
                                 : ProjMatrix(1, 0, twice_k, 1);
    result = result * power;
  }
  return result;
}

bool in_gamma2(const ProjMatrix& m) {
  return is_identity_mod(m, 2);
}

Word matrix_to_word(const ProjMatrix& m) {
  if (!in_gamma2(m)) {
    throw InvariantError("matrix " + format_matrix(m) + " is not in Gamma(2)");
  }
  std::int64_t a = m.a(), b = m.b(), c = m.c(), d = m.d();
  Word w;
  // Each pass strips a left factor A^k or B^k and strictly shrinks
  // min(|a|, |c|); parity rules out |a| == |c|.
  while (c != 0) {
    if (std::llabs(a) > std::llabs(c)) {
      const std::int64_t k = balanced_quotient(a, c);
      w.append(Letter::A, k);
      a = checked_sub(a, checked_mul(2 * k, c));
      b = checked_sub(b, checked_mul(2 * k, d));
    } else {
      const std::int64_t k = balanced_quotient(c, a);
      w.append(Letter::B, k);
      c = checked_sub(c, checked_mul(2 * k, a));
      d = checked_sub(d, checked_mul(2 * k, b));
    }
  }
  if (a < 0) b = -b;
  w.append(Letter::A, b / 2);
  return w;
}

std::string format_matrix(const ProjMatrix& m) {
  return "(" + std::to_string(m.a()) + " " + std::to_string(m.b()) + "; " +
         std::to_string(m.c()) + " " + std::to_string(m.d()) + ")";
}

}  // namespace dessins
