#include "skewplane/dilation.hpp"

#include <map>
#include <set>
#include <sstream>

#include "skewplane/sampler.hpp"

namespace skewplane {

namespace {

Point require_point(const Intersection& s, const char* stage) {
  if (s.kind != Intersection::Kind::point)
    throw invariant_violation(std::string("dilation trace did not meet in a point: ") + stage);
  return s.p;
}

}  // namespace

DilationMap DilationMap::identity(PlaneModel plane) {
  return DilationMap(DilationKind::identity, std::move(plane));
}

DilationMap DilationMap::translation(PlaneModel plane, Point p, Point p_image) {
  if (p == p_image)
    throw degenerate_input("translation reference pair is degenerate; use the identity kind");
  DilationMap d(DilationKind::translation, std::move(plane));
  d.p_ = std::move(p);
  d.p_image_ = std::move(p_image);
  return d;
}

DilationMap DilationMap::homothety(PlaneModel plane, Point fixed, Point p, Point p_image) {
  if (p == fixed || p_image == fixed)
    throw degenerate_input("homothety reference points must differ from the fixed point");
  if (p == p_image)
    throw degenerate_input("homothety with ratio one is the identity; use the identity kind");
  if (!plane.collinear(fixed, p, p_image))
    throw degenerate_input("homothety reference pair must be collinear with the fixed point");
  DilationMap d(DilationKind::homothety, std::move(plane));
  d.v_ = std::move(fixed);
  d.p_ = std::move(p);
  d.p_image_ = std::move(p_image);
  return d;
}

const Point& DilationMap::fixed_point() const {
  if (kind_ != DilationKind::homothety)
    throw domain_error("only a homothety has a fixed point");
  return v_;
}

Point DilationMap::apply_homothety(const Point& q) const {
  if (q == v_) return v_;
  Line vp = plane_.line_through(v_, p_);
  if (!plane_.contains(vp, q)) {
    Line vq = plane_.line_through(v_, q);
    Line pq = plane_.line_through(p_, q);
    return require_point(plane_.intersect(vq, plane_.parallel_through(p_image_, pq)),
                         "homothety");
  }
  // q on the reference line: route through an intermediate off-line point
  Point r = plane_.point_off(vp, v_);
  Line vr = plane_.line_through(v_, r);
  Line pr = plane_.line_through(p_, r);
  Point r_image =
      require_point(plane_.intersect(vr, plane_.parallel_through(p_image_, pr)),
                    "homothety intermediate");
  return require_point(
      plane_.intersect(vp, plane_.parallel_through(r_image, plane_.line_through(r, q))),
      "homothety collinear");
}

Point DilationMap::apply_translation(const Point& q) const {
  Line dir = plane_.line_through(p_, p_image_);
  if (!plane_.contains(dir, q)) {
    return require_point(
        plane_.intersect(plane_.parallel_through(q, dir),
                         plane_.parallel_through(p_image_, plane_.line_through(p_, q))),
        "translation");
  }
  Point r = plane_.point_off(dir, p_);
  Point r_image = require_point(
      plane_.intersect(plane_.parallel_through(r, dir),
                       plane_.parallel_through(p_image_, plane_.line_through(p_, r))),
      "translation intermediate");
  return require_point(
      plane_.intersect(dir, plane_.parallel_through(r_image, plane_.line_through(r, q))),
      "translation collinear");
}

Point DilationMap::apply(const Point& q) const {
  switch (kind_) {
    case DilationKind::identity:
      return q;
    case DilationKind::translation:
      return apply_translation(q);
    case DilationKind::homothety:
      return apply_homothety(q);
  }
  throw invariant_violation("bad dilation kind");
}

Line DilationMap::apply(const Line& l) const {
  const Ring& ring = plane_.ring();
  Point a = plane_.point_on(l, ring.finite() ? ring.element_at(0) : ring.from_int(0));
  Point b = plane_.point_on(l, ring.finite() ? ring.element_at(1) : ring.from_int(1));
  Point ia = apply(a), ib = apply(b);
  if (ia == ib) throw invariant_violation("dilation collapsed a line");
  Line image = plane_.line_through(ia, ib);
  if (!plane_.parallel(image, l))
    throw invariant_violation("dilation image line is not parallel to the source");
  return image;
}

Restriction restrict(const DilationMap& d, const Line& l) {
  Restriction r;
  r.source = l;
  r.image = d.apply(l);
  if (d.plane().finite())
    for (const Point& p : d.plane().points_on(l)) r.pairs.emplace_back(p, d.apply(p));
  return r;
}

Report check_restriction_bijective(const DilationMap& d, const Line& l) {
  Report rep;
  Restriction r = restrict(d, l);
  const PlaneModel& plane = d.plane();
  bool on_image = true;
  std::set<Point> images;
  for (const auto& [src, img] : r.pairs) {
    if (!plane.contains(r.image, img)) on_image = false;
    images.insert(img);
  }
  if (on_image)
    rep.pass("restriction", "lands-on-image");
  else
    rep.fail("restriction", "lands-on-image", plane.to_string(r.image));
  if (images.size() == r.pairs.size() && images.size() == plane.ring().order())
    rep.pass("restriction", "bijective",
             std::to_string(images.size()) + " distinct images");
  else
    rep.fail("restriction", "bijective",
             std::to_string(images.size()) + " distinct images of " +
                 std::to_string(r.pairs.size()) + " points");
  return rep;
}

namespace {

LineAlgebra image_algebra(const DilationMap& d, const LineAlgebra& k1, Line l2) {
  // frame at (d(O), d(I)); auxiliary transported as d(B)
  return LineAlgebra(d.plane(), l2, d.apply(k1.zero()), d.apply(k1.one()),
                     AuxPolicy::explicit_point, d.apply(k1.auxiliary()));
}

}  // namespace

Report check_isomorphism(const DilationMap& d, const LineAlgebra& k1, Exec exec) {
  Report rep;
  const PlaneModel& plane = d.plane();
  Line l2 = d.apply(k1.carrier());
  LineAlgebra k2 = image_algebra(d, k1, l2);
  const std::vector<Point> pts = k1.points();
  const std::size_t q = pts.size();
  auto pair_witness = [&](std::size_t i) {
    return plane.to_string(pts[i / q]) + " " + plane.to_string(pts[i % q]);
  };
  auto additive = [&](std::size_t i) {
    const Point &a = pts[i / q], &c = pts[i % q];
    return d.apply(k1.add(a, c)) == k2.add(d.apply(a), d.apply(c));
  };
  auto multiplicative = [&](std::size_t i) {
    const Point &a = pts[i / q], &c = pts[i % q];
    return d.apply(k1.mul(a, c)) == k2.mul(d.apply(a), d.apply(c));
  };
  if (auto bad = first_failure(q * q, additive, exec))
    rep.fail("dilation-iso", "additive", pair_witness(*bad));
  else
    rep.pass("dilation-iso", "additive");
  if (auto bad = first_failure(q * q, multiplicative, exec))
    rep.fail("dilation-iso", "multiplicative", pair_witness(*bad));
  else
    rep.pass("dilation-iso", "multiplicative");
  return rep;
}

Report check_isomorphism_sampled(const DilationMap& d, const LineAlgebra& k1,
                                 std::uint64_t seed, std::size_t samples,
                                 int rational_bound) {
  Sampler smp(seed, rational_bound);
  Report rep;
  const PlaneModel& plane = d.plane();
  LineAlgebra k2 = image_algebra(d, k1, d.apply(k1.carrier()));
  std::size_t add_bad = 0, mul_bad = 0;
  std::string add_witness, mul_witness;
  for (std::size_t i = 0; i < samples; ++i) {
    Point a = smp.point_on(plane, k1.carrier());
    Point c = smp.point_on(plane, k1.carrier());
    if (!(d.apply(k1.add(a, c)) == k2.add(d.apply(a), d.apply(c))) && add_bad++ == 0)
      add_witness = plane.to_string(a) + " " + plane.to_string(c);
    if (!(d.apply(k1.mul(a, c)) == k2.mul(d.apply(a), d.apply(c))) && mul_bad++ == 0)
      mul_witness = plane.to_string(a) + " " + plane.to_string(c);
  }
  if (add_bad == 0)
    rep.pass("dilation-iso", "additive", std::to_string(samples) + " samples");
  else
    rep.fail("dilation-iso", "additive", add_witness);
  if (mul_bad == 0)
    rep.pass("dilation-iso", "multiplicative", std::to_string(samples) + " samples");
  else
    rep.fail("dilation-iso", "multiplicative", mul_witness);
  return rep;
}

std::vector<DilationMap> enumerate_dilations(const PlaneModel& plane) {
  if (!plane.finite())
    throw unsupported_operation("cannot enumerate dilations of the quaternion plane");
  const std::vector<Point> pts = plane.points();
  std::vector<DilationMap> out;
  std::map<std::vector<Point>, std::size_t> seen;
  auto add_unique = [&](DilationMap d) {
    std::vector<Point> images;
    images.reserve(pts.size());
    for (const Point& p : pts) images.push_back(d.apply(p));
    if (seen.emplace(std::move(images), out.size()).second) out.push_back(std::move(d));
  };
  add_unique(DilationMap::identity(plane));
  Point origin = pts.front();
  for (const Point& t : pts)
    if (!(t == origin)) add_unique(DilationMap::translation(plane, origin, t));
  for (const Point& v : pts)
    for (const Point& p : pts) {
      if (p == v) continue;
      Line vp = plane.line_through(v, p);
      for (const Point& pi : plane.points_on(vp)) {
        if (pi == v || pi == p) continue;
        add_unique(DilationMap::homothety(plane, v, p, pi));
      }
    }
  return out;
}

}  // namespace skewplane
