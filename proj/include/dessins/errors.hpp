#pragma once

#include <stdexcept>
#include <string>

namespace dessins {

// Malformed text input (cycle strings, words, dessin files, CLI numbers).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that breaks a structural invariant: a non-bijection,
// an intransitive pair, a matrix outside the expected group, ...
class InvariantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A coset enumeration grew past its configured limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dessins
