#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dessins/dessin.hpp"
#include "dessins/freeword.hpp"
#include "dessins/perm.hpp"

namespace fixtures {

using namespace dessins;

inline Dessin make(std::size_t n, const char* sigma, const char* alpha,
                   Label marked = 1) {
  return Dessin(parse_cycles(sigma, n), parse_cycles(alpha, n), marked);
}

inline Dessin gamma2() { return make(1, "", ""); }
inline Dessin three_star() { return make(3, "(1 2 3)", ""); }
inline Dessin gamma0_6() { return make(4, "(3,2,1)(4)", "(1)(2,3,4)"); }
inline Dessin graph_a(Label marked = 2) {
  return make(5, "(1,2,3,4,5)", "(1,2)(3,4)(5)", marked);
}
inline Dessin graph_b(Label marked = 1) {
  return make(5, "(1,2,3,4,5)", "(1,3)(2,4)(5)", marked);
}
// Reconstructed from its degree data: vertices 4 | 2 1 1, faces 3 1, sphere.
inline Dessin fish() { return make(4, "(1 2 3 4)", "(3 4)"); }

inline std::vector<Word> words(std::initializer_list<const char*> texts) {
  std::vector<Word> out;
  for (const char* t : texts) out.push_back(parse_word(t));
  return out;
}

inline std::vector<Word> three_star_generators() {
  return words({"BA^-1", "A^-1B", "B^-1A^-1B^2", "B^-3"});
}
inline std::vector<Word> graph_a_generators() {
  return words({"A^3", "B^2A^-1", "A^2B^2", "ABA^-2", "B^-1A^-1B",
                "AB^-1A^-1BA^-1"});
}
inline std::vector<Word> graph_b_generators() {
  return words({"BA^-3", "AB", "A^2BA^-1", "A^4BA^-2", "A^3BA^-4", "A^5"});
}
inline std::vector<Word> gamma6_published_generators() {
  return words({"A^3", "B^3", "ABA^-2B^-2", "ABAB^-2", "A^2B^2A^-1B^-1",
                "A^2B^2A^2B^-1", "A^2BA^-2B^-2A^-1", "A^2B^3A^-2",
                "A^2BAB^-2A^-1", "AB^-3A^-1", "A^2BA^-1B^-1AB^-1",
                "ABA^-1BAB^-1", "A^2BA^-1BAB^-1A^-1"});
}
// Five-edge sphere, four-edge torus and six-edge genus-2 examples: only
// their generator lists are known, the dessins are found by search.
inline std::vector<Word> sphere5_generators() {
  return words({"B^-1A^2B", "B^2", "ABA^-1", "A^3", "A^-1B^2A",
                "B^-1AB^-1A"});
}
inline std::vector<Word> torus4_generators() {
  return words({"B^4", "BAB^-1", "A^3", "B^-1A^2", "AB^-1A"});
}
inline std::vector<Word> genus2_generators() {
  return words({"B^6", "B^-1A^3B", "A^3", "B^2A^-1B", "BAB", "AB^2", "B^3A"});
}

// Random word of exactly `letters` letters (before free reduction).
inline Word random_word(std::mt19937_64& rng, std::size_t letters) {
  std::uniform_int_distribution<int> pick(0, 3);
  Word w;
  for (std::size_t i = 0; i < letters; ++i) {
    const int k = pick(rng);
    w.append(k % 2 == 0 ? Letter::A : Letter::B, k < 2 ? 1 : -1);
  }
  return w;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Label> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Label>(i + 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

inline Dessin random_dessin(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Permutation s = random_permutation(rng, n);
    Permutation a = random_permutation(rng, n);
    const std::array<Permutation, 2> gens{s, a};
    if (!is_transitive(gens, n)) continue;
    std::uniform_int_distribution<Label> edge(1, static_cast<Label>(n));
    return Dessin(std::move(s), std::move(a), edge(rng));
  }
}

// Every permutation of {1..n}, lexicographic.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  std::vector<Label> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Label>(i + 1);
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// Every dessin with n edges and the given marked edge.
inline std::vector<Dessin> all_dessins(std::size_t n, Label marked = 1) {
  std::vector<Dessin> out;
  const auto perms = all_permutations(n);
  for (const auto& s : perms) {
    for (const auto& a : perms) {
      const std::array<Permutation, 2> gens{s, a};
      if (is_transitive(gens, n)) out.emplace_back(s, a, marked);
    }
  }
  return out;
}

}  // namespace fixtures
