#include "dessins/dessin.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "dessins/errors.hpp"

namespace dessins {

Dessin::Dessin(Permutation sigma, Permutation alpha, Label marked)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), marked_(marked) {
  const std::size_t n = sigma_.size();
  if (n == 0) throw InvariantError("dessin must have at least one edge");
  if (alpha_.size() != n) {
    throw InvariantError("sigma and alpha act on different edge counts");
  }
  const std::array<Permutation, 2> gens{sigma_, alpha_};
  if (!is_transitive(gens, n)) {
    throw InvariantError("sigma and alpha are not transitive on the " +
                         std::to_string(n) + " edges (graph disconnected)");
  }
  if (marked_ < 1 || marked_ > n) {
    throw InvariantError("marked edge " + std::to_string(marked_) +
                         " out of range 1.." + std::to_string(n));
  }
}

Permutation faces(const Dessin& d) {
  return inverse(compose(d.sigma(), d.alpha()));
}

DegreeReport report(const Dessin& d) {
  DegreeReport r;
  r.black_degrees = cycle_type(d.sigma());
  r.white_degrees = cycle_type(d.alpha());
  r.face_degrees = cycle_type(faces(d));

  std::uint64_t l = 1;
  for (const auto* degs : {&r.black_degrees, &r.white_degrees, &r.face_degrees}) {
    for (std::size_t k : *degs) l = std::lcm(l, static_cast<std::uint64_t>(k));
  }
  r.level = 2 * l;

  const auto vertices =
      static_cast<std::int64_t>(r.black_degrees.size() + r.white_degrees.size());
  const auto face_count = static_cast<std::int64_t>(r.face_degrees.size());
  const auto chi = vertices - static_cast<std::int64_t>(d.edges()) + face_count;
  if (chi > 2 || (2 - chi) % 2 != 0) {
    throw InvariantError("Euler characteristic " + std::to_string(chi) +
                         " is not that of a closed orientable surface");
  }
  r.genus = static_cast<std::uint64_t>((2 - chi) / 2);
  return r;
}

std::vector<FaceIncidence> face_vertex_incidence(const Dessin& d) {
  const std::size_t n = d.edges();
  const auto black = cycles(d.sigma());
  const auto white = cycles(d.alpha());
  std::vector<std::size_t> black_of(n + 1), white_of(n + 1);
  for (std::size_t i = 0; i < black.size(); ++i) {
    for (Label e : black[i]) black_of[e] = i;
  }
  for (std::size_t i = 0; i < white.size(); ++i) {
    for (Label e : white[i]) white_of[e] = i;
  }

  std::vector<FaceIncidence> out;
  for (Cycle& face : cycles(faces(d))) {
    std::vector<std::size_t> bs, ws;
    for (Label e : face) {
      bs.push_back(black_of[e]);
      ws.push_back(white_of[e]);
    }
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());

    FaceIncidence inc{std::move(face), {}};
    for (std::size_t i : bs) {
      inc.vertices.push_back({VertexColor::Black, i, black[i].size()});
    }
    for (std::size_t i : ws) {
      inc.vertices.push_back({VertexColor::White, i, white[i].size()});
    }
    out.push_back(std::move(inc));
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::uint64_t parse_unsigned(std::string_view s, const std::string& key,
                             std::size_t line_no) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + key +
                     "' expects a non-negative integer, got \"" +
                     std::string(s) + "\"");
  }
  return v;
}

}  // namespace

Dessin parse_dessin(std::string_view text) {
  std::map<std::string, std::pair<std::string, std::size_t>> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'key = value'");
    }
    std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key != "edges" && key != "sigma" && key != "alpha" && key != "marked") {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" +
                       key + "'");
    }
    if (values.contains(key)) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" +
                       key + "'");
    }
    values.emplace(std::move(key),
                   std::make_pair(std::string(value), line_no));
  }

  for (const char* required : {"edges", "sigma", "alpha"}) {
    if (!values.contains(required)) {
      throw ParseError(std::string("missing key '") + required + "'");
    }
  }
  const auto& [edges_text, edges_line] = values.at("edges");
  const auto n = parse_unsigned(edges_text, "edges", edges_line);
  if (n == 0) throw InvariantError("edges must be at least 1");

  Label marked = 1;
  if (const auto it = values.find("marked"); it != values.end()) {
    const auto m = parse_unsigned(it->second.first, "marked", it->second.second);
    if (m < 1 || m > n) {
      throw InvariantError("marked edge " + std::to_string(m) +
                           " out of range 1.." + std::to_string(n));
    }
    marked = static_cast<Label>(m);
  }
  Permutation sigma = parse_cycles(values.at("sigma").first, n);
  Permutation alpha = parse_cycles(values.at("alpha").first, n);
  return Dessin(std::move(sigma), std::move(alpha), marked);
}

std::string format_dessin(const Dessin& d) {
  auto field = [](const std::string& key, const std::string& value) {
    return value.empty() ? key + " =\n" : key + " = " + value + "\n";
  };
  return "edges = " + std::to_string(d.edges()) + "\n" +
         field("sigma", format_cycles(d.sigma())) +
         field("alpha", format_cycles(d.alpha())) +
         "marked = " + std::to_string(d.marked()) + "\n";
}

Dessin remark(const Dessin& d, Label e) {
  return Dessin(d.sigma(), d.alpha(), e);
}

std::string to_dot(const Dessin& d) {
  const auto black = cycles(d.sigma());
  const auto white = cycles(d.alpha());
  std::vector<std::size_t> white_of(d.edges() + 1);
  for (std::size_t i = 0; i < white.size(); ++i) {
    for (Label e : white[i]) white_of[e] = i + 1;
  }

  std::ostringstream out;
  out << "digraph dessin {\n";
  out << "  // counterclockwise edge order at each vertex\n";
  for (std::size_t i = 0; i < black.size(); ++i) {
    out << "  //   b" << i + 1 << ":";
    for (Label e : black[i]) out << ' ' << e;
    out << '\n';
  }
  for (std::size_t i = 0; i < white.size(); ++i) {
    out << "  //   w" << i + 1 << ":";
    for (Label e : white[i]) out << ' ' << e;
    out << '\n';
  }
  out << "  // marked edge: " << d.marked() << '\n';
  out << "  node [shape=circle, label=\"\", width=0.25];\n";
  for (std::size_t i = 0; i < black.size(); ++i) {
    out << "  b" << i + 1 << " [style=filled, fillcolor=black];\n";
  }
  for (std::size_t i = 0; i < white.size(); ++i) {
    out << "  w" << i + 1 << " [style=solid, fillcolor=white];\n";
  }
  for (std::size_t i = 0; i < black.size(); ++i) {
    for (Label e : black[i]) {
      out << "  b" << i + 1 << " -> w" << white_of[e] << " [label=\"" << e
          << '"';
      if (e == d.marked()) out << ", penwidth=2";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace dessins
