#include "dessins/congruence.hpp"

#include <tuple>
#include <unordered_map>

#include "dessins/errors.hpp"

namespace dessins {

namespace {

std::int64_t residue(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

void require_even_modulus(std::int64_t m) {
  if (m < 2 || m % 2 != 0) {
    throw InvariantError("modulus must be even and at least 2, got " +
                         std::to_string(m));
  }
}

}  // namespace

ModMatrix::ModMatrix(std::int64_t m, std::int64_t a, std::int64_t b,
                     std::int64_t c, std::int64_t d)
    : m_(m) {
  if (m < 2) throw InvariantError("modulus must be at least 2");
  a_ = residue(a, m);
  b_ = residue(b, m);
  c_ = residue(c, m);
  d_ = residue(d, m);
  if (residue(a_ * d_ - b_ * c_, m) != residue(1, m)) {
    throw InvariantError("matrix does not have determinant 1 mod " +
                         std::to_string(m));
  }
  const std::int64_t na = residue(-a_, m), nb = residue(-b_, m),
                     nc = residue(-c_, m), nd = residue(-d_, m);
  if (std::tie(na, nb, nc, nd) < std::tie(a_, b_, c_, d_)) {
    a_ = na;
    b_ = nb;
    c_ = nc;
    d_ = nd;
  }
}

ModMatrix ModMatrix::reduce(const ProjMatrix& x, std::int64_t m) {
  return ModMatrix(m, x.a(), x.b(), x.c(), x.d());
}

std::uint64_t ModMatrix::key() const noexcept {
  const auto m = static_cast<std::uint64_t>(m_);
  return ((static_cast<std::uint64_t>(a_) * m + static_cast<std::uint64_t>(b_)) * m +
          static_cast<std::uint64_t>(c_)) * m + static_cast<std::uint64_t>(d_);
}

ModMatrix operator*(const ModMatrix& x, const ModMatrix& y) {
  const std::int64_t m = x.m_;
  return ModMatrix(m, (x.a_ * y.a_ + x.b_ * y.c_) % m,
                   (x.a_ * y.b_ + x.b_ * y.d_) % m,
                   (x.c_ * y.a_ + x.d_ * y.c_) % m,
                   (x.c_ * y.b_ + x.d_ * y.d_) % m);
}

CosetTable quotient_table(std::int64_t m, std::size_t max_cosets) {
  require_even_modulus(m);
  if (m > (std::int64_t{1} << 15)) {
    throw BudgetExceeded("modulus " + std::to_string(m) + " is too large");
  }
  const ModMatrix gen_a = ModMatrix::reduce(generator_matrix(Letter::A), m);
  const ModMatrix gen_b = ModMatrix::reduce(generator_matrix(Letter::B), m);

  std::vector<ModMatrix> elements{ModMatrix::identity(m)};
  std::unordered_map<std::uint64_t, Label> index{{elements[0].key(), 1}};
  std::vector<Label> image_a, image_b;

  auto locate = [&](const ModMatrix& x) -> Label {
    const auto [it, inserted] =
        index.try_emplace(x.key(), static_cast<Label>(elements.size() + 1));
    if (inserted) {
      if (elements.size() >= max_cosets) {
        throw BudgetExceeded("Gamma(" + std::to_string(m) + ") has more than " +
                             std::to_string(max_cosets) + " cosets in Gamma(2)");
      }
      elements.push_back(x);
    }
    return it->second;
  };

  // The image of Gamma(2) is finite, so closing under A and B alone reaches
  // all of it.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const ModMatrix x = elements[i];
    image_a.push_back(locate(x * gen_a));
    image_b.push_back(locate(x * gen_b));
  }
  return CosetTable(Permutation::from_images(std::move(image_a)),
                    Permutation::from_images(std::move(image_b)), 1);
}

std::vector<Word> gamma_m_generators(std::int64_t m, std::size_t max_cosets) {
  return schreier_generators(quotient_table(m, max_cosets));
}

const char* to_string(CongruenceOutcome outcome) {
  switch (outcome) {
    case CongruenceOutcome::Congruence: return "Congruence";
    case CongruenceOutcome::Noncongruence: return "Noncongruence";
    case CongruenceOutcome::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

std::shared_ptr<const CongruenceDecider::Quotient> CongruenceDecider::quotient(
    std::int64_t m) {
  {
    std::lock_guard lock(mutex_);
    if (const auto it = cache_.find(m); it != cache_.end()) return it->second;
  }
  const CosetTable table = quotient_table(m, max_cosets_);
  auto q = std::make_shared<const Quotient>(
      Quotient{table.size(), schreier_generators(table)});
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(m, std::move(q)).first->second;
}

CongruenceVerdict CongruenceDecider::decide(const Dessin& d) {
  CongruenceVerdict v;
  v.level = report(d).level;
  std::shared_ptr<const Quotient> q;
  try {
    q = quotient(static_cast<std::int64_t>(v.level));
  } catch (const BudgetExceeded&) {
    v.outcome = CongruenceOutcome::BudgetExceeded;
    return v;
  }
  v.quotient_index = q->index;
  v.generator_count = q->generators.size();

  const CosetTable edges = coset_table(edge_action(d));
  for (const Word& w : q->generators) {
    if (!edges.contains(w)) {
      v.outcome = CongruenceOutcome::Noncongruence;
      v.witness = w;
      return v;
    }
  }
  v.outcome = CongruenceOutcome::Congruence;
  return v;
}

CongruenceVerdict decide(const Dessin& d, std::size_t max_cosets) {
  return CongruenceDecider(max_cosets).decide(d);
}

}  // namespace dessins
