#include "skewplane/checks.hpp"

#include <sstream>

#include "skewplane/sampler.hpp"

namespace skewplane {

namespace {

std::string plural(std::size_t n, const char* what) {
  return std::to_string(n) + " " + what;
}

}  // namespace

void validate_desargues(const PlaneModel& plane, const DesarguesConfig& cfg) {
  if (!plane.parallel(cfg.lk, cfg.ll) || !plane.parallel(cfg.ll, cfg.lm))
    throw hypothesis_violation("lk, ll, lm must be parallel");
  if (cfg.lk == cfg.ll || cfg.ll == cfg.lm || cfg.lk == cfg.lm)
    throw hypothesis_violation("lk, ll, lm must be pairwise distinct");
  if (!plane.contains(cfg.lk, cfg.A) || !plane.contains(cfg.lk, cfg.A1))
    throw hypothesis_violation("A, A' must lie on lk");
  if (!plane.contains(cfg.ll, cfg.B) || !plane.contains(cfg.ll, cfg.B1))
    throw hypothesis_violation("B, B' must lie on ll");
  if (!plane.contains(cfg.lm, cfg.C) || !plane.contains(cfg.lm, cfg.C1))
    throw hypothesis_violation("C, C' must lie on lm");
  if (cfg.A == cfg.C) throw hypothesis_violation("A != C");
  if (cfg.A1 == cfg.C1) throw hypothesis_violation("A' != C'");
  if (!plane.parallel(plane.line_through(cfg.A, cfg.B),
                      plane.line_through(cfg.A1, cfg.B1)))
    throw hypothesis_violation("AB must be parallel to A'B'");
  if (!plane.parallel(plane.line_through(cfg.B, cfg.C),
                      plane.line_through(cfg.B1, cfg.C1)))
    throw hypothesis_violation("BC must be parallel to B'C'");
}

namespace {

bool desargues_conclusion(const PlaneModel& plane, const DesarguesConfig& cfg) {
  return plane.parallel(plane.line_through(cfg.A, cfg.C),
                        plane.line_through(cfg.A1, cfg.C1));
}

}  // namespace

std::string describe(const PlaneModel& plane, const DesarguesConfig& cfg) {
  std::ostringstream os;
  os << "A=" << plane.to_string(cfg.A) << " B=" << plane.to_string(cfg.B)
     << " C=" << plane.to_string(cfg.C) << " A'=" << plane.to_string(cfg.A1)
     << " B'=" << plane.to_string(cfg.B1) << " C'=" << plane.to_string(cfg.C1);
  return os.str();
}

std::string describe(const PlaneModel& plane, const PappusConfig& cfg) {
  std::ostringstream os;
  os << "l=" << plane.to_string(cfg.l1) << " l'=" << plane.to_string(cfg.l2);
  const Point* ps[] = {&cfg.P1, &cfg.P2, &cfg.P3, &cfg.P4, &cfg.P5, &cfg.P6};
  for (int i = 0; i < 6; ++i) os << " P" << i + 1 << "=" << plane.to_string(*ps[i]);
  return os.str();
}

Report check_desargues(const PlaneModel& plane, const DesarguesConfig& cfg) {
  Report rep;
  validate_desargues(plane, cfg);
  if (desargues_conclusion(plane, cfg))
    rep.pass("desargues", "config");
  else
    rep.fail("desargues", "config", describe(plane, cfg));
  return rep;
}

Report check_desargues_sampled(const PlaneModel& plane, std::uint64_t seed,
                               std::size_t samples, int rational_bound) {
  Sampler smp(seed, rational_bound);
  Report rep;
  std::size_t rejected = 0, checked = 0, violations = 0;
  std::string first_witness;
  while (checked < samples) {
    Line lk = smp.line(plane);
    Line ll = plane.parallel_through(smp.point(plane), lk);
    Line lm = plane.parallel_through(smp.point(plane), lk);
    if (lk == ll || lk == lm || ll == lm) {
      ++rejected;
      continue;
    }
    DesarguesConfig cfg;
    cfg.lk = lk;
    cfg.ll = ll;
    cfg.lm = lm;
    cfg.A = smp.point_on(plane, lk);
    cfg.A1 = smp.point_on(plane, lk);
    cfg.B = smp.point_on(plane, ll);
    cfg.C = smp.point_on(plane, lm);
    // transport the two parallel-join constraints
    auto b1 = plane.intersect(plane.parallel_through(cfg.A1, plane.line_through(cfg.A, cfg.B)), ll);
    if (b1.kind != Intersection::Kind::point) {
      ++rejected;
      continue;
    }
    cfg.B1 = b1.p;
    auto c1 = plane.intersect(plane.parallel_through(cfg.B1, plane.line_through(cfg.B, cfg.C)), lm);
    if (c1.kind != Intersection::Kind::point) {
      ++rejected;
      continue;
    }
    cfg.C1 = c1.p;
    try {
      validate_desargues(plane, cfg);
    } catch (const hypothesis_violation&) {
      ++rejected;
      continue;
    }
    ++checked;
    if (!desargues_conclusion(plane, cfg)) {
      if (violations == 0) first_witness = describe(plane, cfg);
      ++violations;
    }
  }
  rep.info("desargues", "sampled-configs", plural(checked, "checked") + ", " +
                                               plural(rejected, "rejected"));
  if (violations == 0)
    rep.pass("desargues", "sampled");
  else
    rep.fail("desargues", "sampled",
             plural(violations, "violations; first: ") + first_witness);
  return rep;
}

Report check_desargues_exhaustive(const PlaneModel& plane, Exec exec) {
  Report rep;
  const Ring& ring = plane.ring();
  const std::size_t q = ring.order();
  // parallel classes, each a vector of q lines
  std::vector<std::vector<Line>> classes;
  for (std::size_t bi = 0; bi < q; ++bi) {
    std::vector<Line> cls;
    for (std::size_t ci = 0; ci < q; ++ci)
      cls.push_back(Line{ring.one(), ring.element_at(bi), ring.element_at(ci)});
    classes.push_back(std::move(cls));
  }
  {
    std::vector<Line> cls;
    for (std::size_t ci = 0; ci < q; ++ci)
      cls.push_back(Line{ring.zero(), ring.one(), ring.element_at(ci)});
    classes.push_back(std::move(cls));
  }
  if (q < 3) {
    rep.info("desargues", "exhaustive-configs", "0 checked (no line triple)");
    rep.pass("desargues", "exhaustive");
    return rep;
  }
  const std::size_t triples = q * (q - 1) * (q - 2);
  const std::size_t per_class = triples * q * q * q * q;  // A, A', B, C
  const std::size_t total = classes.size() * per_class;
  const std::vector<RingElem> elems = ring.elements();

  auto build = [&](std::size_t idx, DesarguesConfig& cfg) {
    std::size_t ci = idx / per_class;
    std::size_t rest = idx % per_class;
    std::size_t tidx = rest / (q * q * q * q);
    std::size_t params = rest % (q * q * q * q);
    // decode an ordered distinct triple (i, j, k) of line indices
    std::size_t i = tidx / ((q - 1) * (q - 2));
    std::size_t jk = tidx % ((q - 1) * (q - 2));
    std::size_t j = jk / (q - 2), k = jk % (q - 2);
    if (j >= i) ++j;
    if (k >= std::min(i, j)) ++k;
    if (k >= std::max(i, j)) ++k;
    const auto& cls = classes[ci];
    cfg.lk = cls[i];
    cfg.ll = cls[j];
    cfg.lm = cls[k];
    cfg.A = plane.point_on(cfg.lk, elems[params / (q * q * q)]);
    cfg.A1 = plane.point_on(cfg.lk, elems[(params / (q * q)) % q]);
    cfg.B = plane.point_on(cfg.ll, elems[(params / q) % q]);
    cfg.C = plane.point_on(cfg.lm, elems[params % q]);
    auto b1 = plane.intersect(
        plane.parallel_through(cfg.A1, plane.line_through(cfg.A, cfg.B)), cfg.ll);
    cfg.B1 = b1.p;
    auto c1 = plane.intersect(
        plane.parallel_through(cfg.B1, plane.line_through(cfg.B, cfg.C)), cfg.lm);
    cfg.C1 = c1.p;
    return true;
  };
  auto ok = [&](std::size_t idx) {
    DesarguesConfig cfg;
    build(idx, cfg);
    return desargues_conclusion(plane, cfg);
  };
  rep.info("desargues", "exhaustive-configs", plural(total, "checked"));
  if (auto bad = first_failure(total, ok, exec)) {
    DesarguesConfig cfg;
    build(*bad, cfg);
    rep.fail("desargues", "exhaustive", describe(plane, cfg));
  } else {
    rep.pass("desargues", "exhaustive");
  }
  return rep;
}

void validate_pappus(const PlaneModel& plane, const PappusConfig& cfg) {
  if (cfg.l1 == cfg.l2) throw hypothesis_violation("l and l' must be distinct");
  if (!plane.contains(cfg.l1, cfg.P1) || !plane.contains(cfg.l1, cfg.P3) ||
      !plane.contains(cfg.l1, cfg.P5))
    throw hypothesis_violation("P1, P3, P5 must lie on l");
  if (!plane.contains(cfg.l2, cfg.P2) || !plane.contains(cfg.l2, cfg.P4) ||
      !plane.contains(cfg.l2, cfg.P6))
    throw hypothesis_violation("P2, P4, P6 must lie on l'");
  const Point* ps[] = {&cfg.P1, &cfg.P2, &cfg.P3, &cfg.P4, &cfg.P5, &cfg.P6};
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (*ps[i] == *ps[j]) throw hypothesis_violation("the six points must be distinct");
  auto x = plane.intersect(cfg.l1, cfg.l2);
  if (x.kind == Intersection::Kind::point)
    for (int i = 0; i < 6; ++i)
      if (*ps[i] == x.p)
        throw hypothesis_violation("no point may coincide with l ∩ l'");
  if (!plane.parallel(plane.line_through(cfg.P1, cfg.P2),
                      plane.line_through(cfg.P4, cfg.P5)))
    throw hypothesis_violation("P1P2 must be parallel to P4P5");
  if (!plane.parallel(plane.line_through(cfg.P2, cfg.P3),
                      plane.line_through(cfg.P5, cfg.P6)))
    throw hypothesis_violation("P2P3 must be parallel to P5P6");
}

bool pappus_conclusion_holds(const PlaneModel& plane, const PappusConfig& cfg) {
  validate_pappus(plane, cfg);
  return plane.parallel(plane.line_through(cfg.P3, cfg.P4),
                        plane.line_through(cfg.P6, cfg.P1));
}

namespace {

// Completes a Pappus configuration from l1, l2, P1, P3, P5 (on l1) and P2
// (on l2); P4 and P6 carry the two parallel hypotheses. Returns false when the
// choice cannot be completed to a valid configuration.
bool complete_pappus(const PlaneModel& plane, PappusConfig& cfg) {
  if (cfg.l1 == cfg.l2) return false;
  if (cfg.P1 == cfg.P3 || cfg.P1 == cfg.P5 || cfg.P3 == cfg.P5) return false;
  auto x = plane.intersect(cfg.l1, cfg.l2);
  bool meet = x.kind == Intersection::Kind::point;
  if (meet && (cfg.P1 == x.p || cfg.P3 == x.p || cfg.P5 == x.p || cfg.P2 == x.p))
    return false;
  if (plane.contains(cfg.l1, cfg.P2)) return false;  // P2 at the crossing or l1 = l2
  auto p4 = plane.intersect(
      plane.parallel_through(cfg.P5, plane.line_through(cfg.P1, cfg.P2)), cfg.l2);
  if (p4.kind != Intersection::Kind::point) return false;
  cfg.P4 = p4.p;
  auto p6 = plane.intersect(
      plane.parallel_through(cfg.P5, plane.line_through(cfg.P2, cfg.P3)), cfg.l2);
  if (p6.kind != Intersection::Kind::point) return false;
  cfg.P6 = p6.p;
  if (cfg.P4 == cfg.P2 || cfg.P6 == cfg.P2 || cfg.P4 == cfg.P6) return false;
  if (meet && (cfg.P4 == x.p || cfg.P6 == x.p)) return false;
  return true;
}

}  // namespace

Report check_pappus_exhaustive(const PlaneModel& plane, Exec exec) {
  Report rep;
  const std::vector<Line> lns = plane.lines();
  const std::vector<RingElem> elems = plane.ring().elements();
  const std::size_t L = lns.size(), q = elems.size();
  const std::size_t per_pair = q * q * q * q;  // P1, P3, P5, P2 parameters
  const std::size_t total = L * L * per_pair;

  auto build = [&](std::size_t idx, PappusConfig& cfg) {
    std::size_t pair = idx / per_pair, params = idx % per_pair;
    cfg.l1 = lns[pair / L];
    cfg.l2 = lns[pair % L];
    cfg.P1 = plane.point_on(cfg.l1, elems[params / (q * q * q)]);
    cfg.P3 = plane.point_on(cfg.l1, elems[(params / (q * q)) % q]);
    cfg.P5 = plane.point_on(cfg.l1, elems[(params / q) % q]);
    cfg.P2 = plane.point_on(cfg.l2, elems[params % q]);
    return complete_pappus(plane, cfg);
  };
  auto ok = [&](std::size_t idx) {
    PappusConfig cfg;
    if (!build(idx, cfg)) return true;  // not a valid configuration
    return plane.parallel(plane.line_through(cfg.P3, cfg.P4),
                          plane.line_through(cfg.P6, cfg.P1));
  };
  rep.info("pappus", "exhaustive-grid", plural(total, "candidate tuples"));
  if (auto bad = first_failure(total, ok, exec)) {
    PappusConfig cfg;
    build(*bad, cfg);
    rep.fail("pappus", "exhaustive", describe(plane, cfg));
  } else {
    rep.pass("pappus", "exhaustive");
  }
  return rep;
}

namespace {

// Draws valid configurations until `samples` have been checked or the first
// violation is found with stop_at_violation.
struct PappusScan {
  std::size_t checked = 0, rejected = 0;
  std::optional<PappusConfig> violation;
};

PappusScan scan_pappus(const PlaneModel& plane, std::uint64_t seed,
                       std::size_t samples, int rational_bound,
                       bool stop_at_violation) {
  Sampler smp(seed, rational_bound);
  PappusScan scan;
  while (scan.checked < samples) {
    PappusConfig cfg;
    cfg.l1 = smp.line(plane);
    cfg.l2 = smp.line(plane);
    cfg.P1 = smp.point_on(plane, cfg.l1);
    cfg.P3 = smp.point_on(plane, cfg.l1);
    cfg.P5 = smp.point_on(plane, cfg.l1);
    cfg.P2 = smp.point_on(plane, cfg.l2);
    if (!complete_pappus(plane, cfg)) {
      ++scan.rejected;
      continue;
    }
    ++scan.checked;
    if (!plane.parallel(plane.line_through(cfg.P3, cfg.P4),
                        plane.line_through(cfg.P6, cfg.P1))) {
      scan.violation = cfg;
      if (stop_at_violation) break;
    }
  }
  return scan;
}

}  // namespace

Report check_pappus_sampled(const PlaneModel& plane, std::uint64_t seed,
                            std::size_t samples, int rational_bound,
                            bool expect_violation) {
  PappusScan scan = scan_pappus(plane, seed, samples, rational_bound, expect_violation);
  Report rep;
  rep.info("pappus", "sampled-configs", plural(scan.checked, "checked") + ", " +
                                            plural(scan.rejected, "rejected"));
  if (expect_violation) {
    if (scan.violation) {
      // the witness must survive an independent re-validation
      if (pappus_conclusion_holds(plane, *scan.violation))
        rep.fail("pappus", "countermodel", "witness failed re-verification");
      else
        rep.pass("pappus", "countermodel", describe(plane, *scan.violation));
    } else {
      rep.fail("pappus", "countermodel", "no violating configuration found");
    }
  } else {
    if (scan.violation)
      rep.fail("pappus", "sampled", describe(plane, *scan.violation));
    else
      rep.pass("pappus", "sampled");
  }
  return rep;
}

std::optional<PappusConfig> find_pappus_violation(const PlaneModel& plane,
                                                  std::uint64_t seed,
                                                  std::size_t samples,
                                                  int rational_bound,
                                                  std::size_t* tried) {
  PappusScan scan = scan_pappus(plane, seed, samples, rational_bound, true);
  if (tried) *tried = scan.checked;
  if (scan.violation && !pappus_conclusion_holds(plane, *scan.violation))
    return scan.violation;
  return std::nullopt;
}

Report check_affine_axioms_sampled(const PlaneModel& plane, std::uint64_t seed,
                                   std::size_t samples, int rational_bound) {
  Sampler smp(seed, rational_bound);
  Report rep;
  std::size_t join_bad = 0, playfair_bad = 0;
  std::string join_witness, playfair_witness;
  for (std::size_t i = 0; i < samples; ++i) {
    Point p = smp.point(plane), r = smp.point(plane);
    if (!(p == r)) {
      Line l = plane.line_through(p, r);
      if (!plane.contains(l, p) || !plane.contains(l, r) ||
          !(plane.line_through(r, p) == l)) {
        if (join_bad++ == 0)
          join_witness = plane.to_string(p) + " " + plane.to_string(r);
      }
    }
    Line l = smp.line(plane);
    Point s = smp.point(plane);
    Line cand = plane.parallel_through(s, l);
    bool ok = plane.contains(cand, s) &&
              plane.intersect(cand, l).kind != Intersection::Kind::point;
    if (ok) {
      // any other sampled line through s must meet l
      Point t = smp.point(plane);
      if (!(t == s) && !plane.contains(cand, t)) {
        Line other = plane.line_through(s, t);
        if (plane.parallel(other, l)) ok = false;  // a second missing line
      }
    }
    if (!ok && playfair_bad++ == 0)
      playfair_witness = plane.to_string(s) + " line " + plane.to_string(l);
  }
  if (join_bad == 0)
    rep.pass("axioms", "unique-join");
  else
    rep.fail("axioms", "unique-join", join_witness);
  if (playfair_bad == 0)
    rep.pass("axioms", "playfair");
  else
    rep.fail("axioms", "playfair", playfair_witness);
  const Ring& ring = plane.ring();
  Point o{ring.zero(), ring.zero()}, e1{ring.one(), ring.zero()}, e2{ring.zero(), ring.one()};
  if (!plane.contains(plane.line_through(o, e1), e2))
    rep.pass("axioms", "non-collinear-triple");
  else
    rep.fail("axioms", "non-collinear-triple");
  return rep;
}

}  // namespace skewplane
