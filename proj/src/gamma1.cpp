#include "dessins/gamma1.hpp"

#include <vector>

#include "dessins/action.hpp"
#include "dessins/congruence.hpp"
#include "dessins/errors.hpp"

namespace dessins {

ProjMatrix matrix_t() { return ProjMatrix(1, 1, 0, 1); }
ProjMatrix matrix_s() { return ProjMatrix(0, -1, 1, 0); }
ProjMatrix matrix_u() { return matrix_t() * matrix_s(); }

std::array<ProjMatrix, 6> gamma2_transversal() {
  std::vector<ProjMatrix> found{ProjMatrix()};
  std::vector<std::uint64_t> keys{ModMatrix::reduce(ProjMatrix(), 2).key()};
  for (std::size_t head = 0; head < found.size() && found.size() < 6; ++head) {
    for (const ProjMatrix& g : {matrix_t(), matrix_s()}) {
      const ProjMatrix y = found[head] * g;
      const std::uint64_t k = ModMatrix::reduce(y, 2).key();
      if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
      keys.push_back(k);
      found.push_back(y);
    }
  }
  std::array<ProjMatrix, 6> out;
  std::copy_n(found.begin(), 6, out.begin());
  return out;
}

namespace {

std::size_t rep_index(const std::array<ProjMatrix, 6>& reps,
                      const ProjMatrix& m) {
  const std::uint64_t k = ModMatrix::reduce(m, 2).key();
  for (std::size_t j = 0; j < reps.size(); ++j) {
    if (ModMatrix::reduce(reps[j], 2).key() == k) return j;
  }
  throw InvariantError("no Gamma(2) coset representative for " +
                       format_matrix(m));
}

}  // namespace

Gamma1Dessin to_gamma1(const Dessin& d) {
  const auto reps = gamma2_transversal();
  const CosetTable edges = coset_table(edge_action(d));
  const std::size_t n = d.edges();

  // Right action of g on the coset of (edge e, representative c_j):
  // c_j g = h c_j' with h in Gamma(2), and h moves e along the dessin.
  auto act = [&](const ProjMatrix& g) {
    std::vector<Label> images(6 * n);
    for (Label e = 1; e <= n; ++e) {
      for (std::size_t j = 0; j < 6; ++j) {
        const ProjMatrix m = reps[j] * g;
        const std::size_t jp = rep_index(reps, m);
        const ProjMatrix h = m * inverse(reps[jp]);
        if (!in_gamma2(h)) {
          throw InvariantError("coset transversal is inconsistent");
        }
        const Label target = edges.endpoint(e, matrix_to_word(h));
        images[Gamma1Dessin::label(e, j + 1) - 1] =
            Gamma1Dessin::label(target, jp + 1);
      }
    }
    return Permutation::from_images(std::move(images));
  };

  Permutation sigma1 = act(matrix_u());
  Permutation alpha1 = act(matrix_s());
  return Gamma1Dessin{
      n, Dessin(std::move(sigma1), std::move(alpha1),
                Gamma1Dessin::label(d.marked(), 1))};
}

std::string format_gamma1(const Gamma1Dessin& g) {
  std::string out;
  out += "# Gamma(1)-dessin of a " + std::to_string(g.source_edges) +
         "-edge Gamma(2)-dessin\n";
  out += "# edge (e, j) has label 6(e-1)+j; coset representatives j:\n";
  const auto reps = gamma2_transversal();
  for (std::size_t j = 0; j < reps.size(); ++j) {
    out += "#   j=" + std::to_string(j + 1) + " " + format_matrix(reps[j]) + "\n";
  }
  for (Label e = 1; e <= g.source_edges; ++e) {
    out += "#";
    for (std::size_t j = 1; j <= 6; ++j) {
      out += " (" + std::to_string(e) + "," + std::to_string(j) + ")->" +
             std::to_string(Gamma1Dessin::label(e, j));
    }
    out += "\n";
  }
  out += format_dessin(g.dessin);
  return out;
}

}  // namespace dessins
