#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "skewplane/parallel.hpp"
#include "skewplane/plane.hpp"
#include "skewplane/report.hpp"

namespace skewplane {

/// Desargues hypothesis data: three parallel carrier lines and the two
/// perspective triangles (A, B, C) and (A', B', C').
struct DesarguesConfig {
  Line lk, ll, lm;
  Point A, A1, B, B1, C, C1;
};

/// Throws hypothesis_violation naming the first violated clause.
void validate_desargues(const PlaneModel& plane, const DesarguesConfig& cfg);

Report check_desargues(const PlaneModel& plane, const DesarguesConfig& cfg);
Report check_desargues_sampled(const PlaneModel& plane, std::uint64_t seed,
                               std::size_t samples, int rational_bound);
/// Finite planes only: every configuration reachable by the sampler's
/// parametrization (choose class, line triple, A, A', B, C; derive B', C').
Report check_desargues_exhaustive(const PlaneModel& plane, Exec exec = Exec::parallel);

/// Affine Pappus configuration: P1, P3, P5 on l1; P2, P4, P6 on l2.
struct PappusConfig {
  Line l1, l2;
  Point P1, P2, P3, P4, P5, P6;
};

void validate_pappus(const PlaneModel& plane, const PappusConfig& cfg);
bool pappus_conclusion_holds(const PlaneModel& plane, const PappusConfig& cfg);

Report check_pappus_exhaustive(const PlaneModel& plane, Exec exec = Exec::parallel);
Report check_pappus_sampled(const PlaneModel& plane, std::uint64_t seed,
                            std::size_t samples, int rational_bound,
                            bool expect_violation);
/// Countermodel hunt; returns the first violating configuration, re-verified.
std::optional<PappusConfig> find_pappus_violation(const PlaneModel& plane,
                                                  std::uint64_t seed,
                                                  std::size_t samples,
                                                  int rational_bound,
                                                  std::size_t* tried = nullptr);

std::string describe(const PlaneModel& plane, const DesarguesConfig& cfg);
std::string describe(const PlaneModel& plane, const PappusConfig& cfg);

Report check_affine_axioms_sampled(const PlaneModel& plane, std::uint64_t seed,
                                   std::size_t samples, int rational_bound);

/// Exhaustive check of axioms 1-3 on a finite plane. Templated so tests can
/// route it through a plane wrapper with a poisoned primitive; `Plane` needs
/// the PlaneModel incidence surface.
template <class Plane>
Report check_affine_axioms_exhaustive(const Plane& plane, Exec exec = Exec::parallel) {
  Report rep;
  const auto pts = plane.points();
  const auto lns = plane.lines();
  const std::size_t np = pts.size();

  // 1: exactly one line through each pair of distinct points
  auto join_ok = [&](std::size_t idx) {
    std::size_t i = idx / np, j = idx % np;
    if (i >= j) return true;
    Line l = plane.line_through(pts[i], pts[j]);
    if (!plane.contains(l, pts[i]) || !plane.contains(l, pts[j])) return false;
    std::size_t cnt = 0;
    for (const Line& m : lns)
      if (plane.contains(m, pts[i]) && plane.contains(m, pts[j])) ++cnt;
    return cnt == 1;
  };
  if (auto bad = first_failure(np * np, join_ok, exec)) {
    std::ostringstream os;
    os << "pair " << plane.to_string(pts[*bad / np]) << " "
       << plane.to_string(pts[*bad % np]);
    rep.fail("axioms", "unique-join", os.str());
  } else {
    rep.pass("axioms", "unique-join");
  }

  // 2 (Playfair): exactly one line through P equal to or missing l; the
  // disjointness test scans point sets rather than trusting normalization
  auto disjoint_or_equal = [&](const Line& m, const Line& l) {
    if (m == l) return true;
    for (const Point& pt : plane.points_on(l))
      if (plane.contains(m, pt)) return false;
    return true;
  };
  auto playfair_ok = [&](std::size_t idx) {
    const Point& p = pts[idx / lns.size()];
    const Line& l = lns[idx % lns.size()];
    Line cand = plane.parallel_through(p, l);
    if (!plane.contains(cand, p)) return false;
    if (!disjoint_or_equal(cand, l)) return false;
    std::size_t cnt = 0;
    for (const Line& m : lns)
      if (plane.contains(m, p) && disjoint_or_equal(m, l)) ++cnt;
    return cnt == 1;
  };
  if (auto bad = first_failure(np * lns.size(), playfair_ok, exec)) {
    std::ostringstream os;
    os << "point " << plane.to_string(pts[*bad / lns.size()]) << " line "
       << plane.to_string(lns[*bad % lns.size()]);
    rep.fail("axioms", "playfair", os.str());
  } else {
    rep.pass("axioms", "playfair");
  }

  // 3: three non-collinear points
  bool found = false;
  for (std::size_t i = 0; i < np && !found; ++i)
    for (std::size_t j = i + 1; j < np && !found; ++j)
      for (std::size_t k = j + 1; k < np && !found; ++k)
        if (!plane.contains(plane.line_through(pts[i], pts[j]), pts[k])) found = true;
  if (found)
    rep.pass("axioms", "non-collinear-triple");
  else
    rep.fail("axioms", "non-collinear-triple", "plane is a single line");
  return rep;
}

}  // namespace skewplane
