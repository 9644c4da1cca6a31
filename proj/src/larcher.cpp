#include "dessins/larcher.hpp"

#include <algorithm>

namespace dessins {

namespace {

FilterVerdict verdict_from(std::uint64_t half_level,
                           std::vector<Violation> violations) {
  FilterVerdict v;
  v.half_level = half_level;
  v.violations = std::move(violations);
  v.outcome = v.violations.empty() ? FilterOutcome::Inconclusive
                                   : FilterOutcome::CertifiedNoncongruence;
  return v;
}

}  // namespace

FilterVerdict pair_filter(const Dessin& d) {
  const std::uint64_t n = report(d).level / 2;
  std::vector<Violation> out;
  for (const FaceIncidence& inc : face_vertex_incidence(d)) {
    const std::uint64_t fd = inc.face.size();
    for (const VertexRef& v : inc.vertices) {
      const std::uint64_t r = (2 * fd * v.degree) % n;
      if (r == 0) continue;
      Violation viol{fd, v.degree, r, false};
      if (std::find(out.begin(), out.end(), viol) == out.end()) {
        out.push_back(viol);
      }
    }
  }
  return verdict_from(n, std::move(out));
}

FilterVerdict width_filter(const Dessin& d) {
  const DegreeReport r = report(d);
  const std::uint64_t n = r.level / 2;
  for (const auto* degs : {&r.black_degrees, &r.white_degrees, &r.face_degrees}) {
    for (std::size_t k : *degs) {
      if (k == n) return verdict_from(n, {});
    }
  }
  Violation missing;
  missing.missing_width = true;
  return verdict_from(n, {missing});
}

FilterVerdict filters(const Dessin& d) {
  FilterVerdict pair = pair_filter(d);
  FilterVerdict width = width_filter(d);
  std::vector<Violation> all = std::move(pair.violations);
  all.insert(all.end(), width.violations.begin(), width.violations.end());
  return verdict_from(pair.half_level, std::move(all));
}

std::string format_violation(const Violation& v, std::uint64_t half_level) {
  if (v.missing_width) {
    return "no vertex or face of degree n = " + std::to_string(half_level);
  }
  return "face d=" + std::to_string(v.face_degree) +
         " vertex e=" + std::to_string(v.vertex_degree) +
         " : 2de mod n = " + std::to_string(v.residue);
}

const char* to_string(FilterOutcome outcome) {
  return outcome == FilterOutcome::CertifiedNoncongruence
             ? "CertifiedNoncongruence"
             : "Inconclusive";
}

}  // namespace dessins
