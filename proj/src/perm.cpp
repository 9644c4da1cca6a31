#include "dessins/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "dessins/errors.hpp"

namespace dessins {

Permutation Permutation::identity(std::size_t n) {
  std::vector<Label> images(n);
  std::iota(images.begin(), images.end(), Label{1});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Label> images) {
  const std::size_t n = images.size();
  std::vector<bool> hit(n, false);
  for (Label x : images) {
    if (x < 1 || x > n) {
      throw InvariantError("permutation image " + std::to_string(x) +
                           " out of range 1.." + std::to_string(n));
    }
    if (hit[x - 1]) {
      throw InvariantError("permutation image " + std::to_string(x) +
                           " repeated");
    }
    hit[x - 1] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n,
                                     std::span<const Cycle> cycle_list) {
  std::vector<Label> images(n);
  std::iota(images.begin(), images.end(), Label{1});
  std::vector<bool> seen(n, false);
  for (const Cycle& c : cycle_list) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Label x = c[i];
      if (x < 1 || x > n) {
        throw InvariantError("label " + std::to_string(x) +
                             " out of range 1.." + std::to_string(n));
      }
      if (seen[x - 1]) {
        throw InvariantError("label " + std::to_string(x) +
                             " appears more than once");
      }
      seen[x - 1] = true;
      images[x - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw InvariantError("compose: permutations of different degree (" +
                         std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()) + ")");
  }
  std::vector<Label> images(p.size());
  for (Label x = 1; x <= p.size(); ++x) images[x - 1] = q(p(x));
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Label> images(p.size());
  for (Label x = 1; x <= p.size(); ++x) images[p(x) - 1] = x;
  return Permutation::from_images(std::move(images));
}

Permutation power(const Permutation& p, std::int64_t k) {
  std::vector<Label> images(p.size());
  for (const Cycle& c : cycles(p)) {
    const auto len = static_cast<std::int64_t>(c.size());
    const std::int64_t shift = ((k % len) + len) % len;
    for (std::int64_t i = 0; i < len; ++i) {
      images[c[i] - 1] = c[(i + shift) % len];
    }
  }
  return Permutation::from_images(std::move(images));
}

std::vector<Cycle> cycles(const Permutation& p) {
  std::vector<Cycle> out;
  std::vector<bool> seen(p.size(), false);
  for (Label start = 1; start <= p.size(); ++start) {
    if (seen[start - 1]) continue;
    Cycle c;
    for (Label x = start; !seen[x - 1]; x = p(x)) {
      seen[x - 1] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const Cycle& c : cycles(p)) lengths.push_back(c.size());
  return lengths;
}

std::uint64_t order(const Permutation& p) {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type(p)) result = std::lcm(result, len);
  return result;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  std::vector<Cycle> parsed;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("cycle text: " + what + " at offset " +
                     std::to_string(i) + " in \"" + std::string(text) + "\"");
  };

  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    Cycle c;
    bool need_label = true;
    for (;;) {
      skip_space();
      if (i >= text.size()) fail("unterminated cycle");
      const char ch = text[i];
      if (ch == ')') {
        if (need_label) fail("expected label before ')'");
        ++i;
        break;
      }
      if (ch == ',') {
        if (need_label) fail("unexpected ','");
        need_label = true;
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        fail(std::string("unexpected character '") + ch + "'");
      }
      Label value = 0;
      const auto [ptr, ec] =
          std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc{}) fail("bad label");
      i = static_cast<std::size_t>(ptr - text.data());
      c.push_back(value);
      need_label = false;
    }
    parsed.push_back(std::move(c));
    skip_space();
  }
  return Permutation::from_cycles(n, parsed);
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const Cycle& c : cycles(p)) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

bool is_transitive(std::span<const Permutation> ps, std::size_t n) {
  if (n == 0) return false;
  for (const Permutation& p : ps) {
    if (p.size() != n) {
      throw InvariantError("is_transitive: permutation of degree " +
                           std::to_string(p.size()) + ", expected " +
                           std::to_string(n));
    }
  }
  std::vector<bool> reached(n, false);
  std::vector<Label> stack{1};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Label x = stack.back();
    stack.pop_back();
    for (const Permutation& p : ps) {
      const Label y = p(x);
      if (!reached[y - 1]) {
        reached[y - 1] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

}  // namespace dessins
