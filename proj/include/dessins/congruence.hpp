#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "dessins/action.hpp"
#include "dessins/dessin.hpp"
#include "dessins/freeword.hpp"

namespace dessins {

inline constexpr std::size_t kDefaultMaxCosets = 1'000'000;

// An element of PSL2(Z/m): residues in [0, m), identified with the negated
// quadruple. Stored as the lexicographically smaller of the two.
class ModMatrix {
 public:
  // Throws InvariantError unless m >= 2 and ad - bc == 1 (mod m).
  ModMatrix(std::int64_t m, std::int64_t a, std::int64_t b, std::int64_t c,
            std::int64_t d);

  static ModMatrix identity(std::int64_t m) { return ModMatrix(m, 1, 0, 0, 1); }
  static ModMatrix reduce(const ProjMatrix& x, std::int64_t m);

  std::int64_t modulus() const noexcept { return m_; }
  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  // Injective for a fixed modulus.
  std::uint64_t key() const noexcept;

  friend ModMatrix operator*(const ModMatrix& x, const ModMatrix& y);
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  std::int64_t m_, a_, b_, c_, d_;
};

// Right action of Gamma(2) on the cosets of Gamma(m), i.e. on the image of
// Gamma(2) in PSL2(Z/m). Point 1 is the identity coset. Throws
// InvariantError unless m is even and >= 2, and BudgetExceeded once more
// than max_cosets cosets appear.
CosetTable quotient_table(std::int64_t m,
                          std::size_t max_cosets = kDefaultMaxCosets);

// Free generators of Gamma(m) as words in A, B (index + 1 of them).
std::vector<Word> gamma_m_generators(std::int64_t m,
                                     std::size_t max_cosets = kDefaultMaxCosets);

enum class CongruenceOutcome { Congruence, Noncongruence, BudgetExceeded };

struct CongruenceVerdict {
  CongruenceOutcome outcome = CongruenceOutcome::Congruence;
  std::optional<Word> witness;       // present iff Noncongruence
  std::uint64_t level = 0;
  std::size_t quotient_index = 0;    // [Gamma(2) : Gamma(level)]
  std::size_t generator_count = 0;   // quotient_index + 1
};

const char* to_string(CongruenceOutcome outcome);

// Decides congruence by testing every generator of Gamma(level) for
// membership. Quotients are cached per modulus, so one decider can be
// reused across many dessins; decide() is safe to call concurrently.
class CongruenceDecider {
 public:
  explicit CongruenceDecider(std::size_t max_cosets = kDefaultMaxCosets)
      : max_cosets_(max_cosets) {}

  CongruenceVerdict decide(const Dessin& d);

 private:
  struct Quotient {
    std::size_t index;
    std::vector<Word> generators;
  };
  std::shared_ptr<const Quotient> quotient(std::int64_t m);

  std::size_t max_cosets_;
  std::mutex mutex_;
  std::map<std::int64_t, std::shared_ptr<const Quotient>> cache_;
};

CongruenceVerdict decide(const Dessin& d,
                         std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace dessins
