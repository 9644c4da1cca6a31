#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dessins {

// Free generators of Gamma(2): A = (1 2; 0 1), B = (1 0; 2 1).
enum class Letter : std::uint8_t { A, B };

struct Syllable {
  Letter letter;
  std::int64_t exponent;  // never zero inside a Word

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A freely reduced word in A, B: adjacent syllables carry different letters.
class Word {
 public:
  Word() = default;

  static Word letter(Letter l, std::int64_t exponent = 1);

  // Freely reduces the input.
  static Word from_syllables(std::span<const Syllable> syllables);

  // Appends l^exponent, merging and cancelling with the last syllable.
  void append(Letter l, std::int64_t exponent);

  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  bool empty() const noexcept { return syllables_.empty(); }

  // Total number of letters (sum of |exponent|).
  std::uint64_t length() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

Word invert(const Word& w);
Word concat(const Word& u, const Word& v);

// Grammar: word := term* ; term := ('A'|'B'|'a'|'b') ('^' signed-int)?
// Lowercase letters are inverses; whitespace is ignored.
// Throws ParseError on a bad character, a missing or zero exponent.
Word parse_word(std::string_view text);

// Uppercase with '^' exponents, e.g. "A B A^-2 B^-2". Identity -> "".
std::string format_word(const Word& w);

// An element of PSL2(Z): integer matrix of determinant 1 up to sign.
// Stored in the representative with c > 0, or c == 0 and a > 0.
class ProjMatrix {
 public:
  ProjMatrix() = default;  // identity

  // Throws InvariantError unless ad - bc == 1.
  ProjMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  // Throws std::overflow_error if an entry leaves int64 range.
  friend ProjMatrix operator*(const ProjMatrix& x, const ProjMatrix& y);

  friend bool operator==(const ProjMatrix&, const ProjMatrix&) = default;

 private:
  std::int64_t a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

ProjMatrix inverse(const ProjMatrix& m);
ProjMatrix generator_matrix(Letter l);

// True iff m is congruent to +-I modulo `modulus`.
bool is_identity_mod(const ProjMatrix& m, std::int64_t modulus);

// Product of the generator matrices in word order.
ProjMatrix eval(const Word& w);

bool in_gamma2(const ProjMatrix& m);

// The unique reduced word evaluating to m. Throws InvariantError if m is not
// in Gamma(2).
Word matrix_to_word(const ProjMatrix& m);

std::string format_matrix(const ProjMatrix& m);

}  // namespace dessins
