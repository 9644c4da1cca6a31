#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dessins {

// Edge labels are 1-based throughout the library.
using Label = std::uint32_t;
using Cycle = std::vector<Label>;

// A bijection of {1..n}.
//
// Products are read left to right: compose(p, q) applies p first, then q.
// Under this convention the inverse of sigma*alpha is the counterclockwise
// face rotation of a dessin.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t n);

  // images[i - 1] is the image of i. Throws InvariantError unless the
  // sequence is a bijection of {1..images.size()}.
  static Permutation from_images(std::vector<Label> images);

  // Cycles may omit fixed points. Throws InvariantError on a repeated or
  // out-of-range label.
  static Permutation from_cycles(std::size_t n, std::span<const Cycle> cycles);

  std::size_t size() const noexcept { return images_.size(); }
  Label operator()(Label x) const { return images_[x - 1]; }
  std::span<const Label> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Label> images) : images_(std::move(images)) {}

  std::vector<Label> images_;
};

// x -> q(p(x)). Throws InvariantError on a size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// p^k for any integer k.
Permutation power(const Permutation& p, std::int64_t k);

// All cycles including fixed points, each rotated to start at its smallest
// element, sorted by that element.
std::vector<Cycle> cycles(const Permutation& p);

// Cycle lengths in the order of cycles(p).
std::vector<std::size_t> cycle_type(const Permutation& p);

// lcm of the cycle lengths.
std::uint64_t order(const Permutation& p);

// Grammar: cycles := cycle* ; cycle := '(' label (sep label)* ')' ;
// sep := ',' | whitespace. Labels absent from every cycle are fixed.
// Throws ParseError on malformed text and InvariantError on a repeated or
// out-of-range label.
Permutation parse_cycles(std::string_view text, std::size_t n);

// Canonical text: nontrivial cycles only, space separated, e.g.
// "(1 4 5 3 2)". The identity formats as the empty string.
std::string format_cycles(const Permutation& p);

// True iff the group generated by ps has one orbit on {1..n}.
bool is_transitive(std::span<const Permutation> ps, std::size_t n);

}  // namespace dessins
