#include <doctest.h>

#include "skewplane/suites.hpp"

using namespace skewplane;

namespace {

PlaneModel gf(long p, int k = 1) { return PlaneModel(Ring::finite_field(p, k)); }

Point pt(const PlaneModel& pl, long x, long y) {
  return Point{pl.ring().from_int(x), pl.ring().from_int(y)};
}

// coordinate oracle: Q -> V + (Q - V) . r with the ratio on the right
Point homothety_oracle(const PlaneModel& pl, const Point& v, const RingElem& r,
                       const Point& q) {
  const Ring& ring = pl.ring();
  return Point{ring.add(v.x, ring.mul(ring.sub(q.x, v.x), r)),
               ring.add(v.y, ring.mul(ring.sub(q.y, v.y), r))};
}

}  // namespace

TEST_CASE("homothety trace matches the coordinate oracle") {
  PlaneModel pl = gf(5);
  // V = origin, (1,0) -> (2,0): ratio 2
  DilationMap d = DilationMap::homothety(pl, pt(pl, 0, 0), pt(pl, 1, 0), pt(pl, 2, 0));
  RingElem two = pl.ring().from_int(2);
  CHECK(d.apply(pt(pl, 0, 1)) == pt(pl, 0, 2));
  CHECK(d.apply(pt(pl, 3, 4)) == pt(pl, 1, 3));
  CHECK(d.apply(pt(pl, 0, 0)) == pt(pl, 0, 0));  // fixed point
  // points on the reference line go through the intermediate route
  CHECK(d.apply(pt(pl, 3, 0)) == pt(pl, 1, 0));
  for (const Point& q : pl.points())
    CHECK(d.apply(q) == homothety_oracle(pl, pt(pl, 0, 0), two, q));
  // every homothety over GF(5) agrees with some right-ratio oracle
  DilationMap e = DilationMap::homothety(pl, pt(pl, 2, 3), pt(pl, 3, 3), pt(pl, 0, 3));
  RingElem three = pl.ring().from_int(3);
  for (const Point& q : pl.points())
    CHECK(e.apply(q) == homothety_oracle(pl, pt(pl, 2, 3), three, q));
}

TEST_CASE("translation trace matches the coordinate oracle") {
  PlaneModel pl = gf(7);
  DilationMap d = DilationMap::translation(pl, pt(pl, 3, 4), pt(pl, 3, 5));
  for (const Point& q : pl.points())
    CHECK(d.apply(q) == pl.translate(q, pl.ring().from_int(0), pl.ring().from_int(1)));
  // no fixed point
  for (const Point& q : pl.points()) CHECK_FALSE(d.apply(q) == q);
  CHECK_THROWS_AS(d.fixed_point(), domain_error);
}

TEST_CASE("degenerate generators are rejected") {
  PlaneModel pl = gf(5);
  CHECK_THROWS_AS(DilationMap::translation(pl, pt(pl, 1, 1), pt(pl, 1, 1)),
                  degenerate_input);
  CHECK_THROWS_AS(
      DilationMap::homothety(pl, pt(pl, 0, 0), pt(pl, 1, 0), pt(pl, 1, 1)),
      degenerate_input);  // not collinear with the fixed point
  CHECK_THROWS_AS(
      DilationMap::homothety(pl, pt(pl, 0, 0), pt(pl, 1, 0), pt(pl, 1, 0)),
      degenerate_input);  // ratio one
  CHECK_THROWS_AS(
      DilationMap::homothety(pl, pt(pl, 0, 0), pt(pl, 0, 0), pt(pl, 2, 0)),
      degenerate_input);
}

TEST_CASE("lines map to parallel lines") {
  PlaneModel pl = gf(5);
  DilationMap d = DilationMap::homothety(pl, pt(pl, 1, 1), pt(pl, 2, 2), pt(pl, 4, 4));
  for (const Line& l : pl.lines()) {
    Line img = d.apply(l);
    CHECK(pl.parallel(l, img));
    for (const Point& q : pl.points_on(l)) CHECK(pl.contains(img, d.apply(q)));
  }
}

TEST_CASE("restrictions to a line are bijective") {
  PlaneModel pl = gf(5);
  LineAlgebra k = canonical_algebra(pl);
  DilationMap d = DilationMap::homothety(pl, pt(pl, 0, 0), pt(pl, 1, 0), pt(pl, 2, 0));
  Restriction r = restrict(d, k.carrier());
  CHECK(r.pairs.size() == 5);
  CHECK(check_restriction_bijective(d, k.carrier()).passed());
  DilationMap t = DilationMap::translation(pl, pt(pl, 0, 0), pt(pl, 1, 3));
  CHECK(check_restriction_bijective(t, k.carrier()).passed());
}

TEST_CASE("restricted dilations preserve both line operations") {
  PlaneModel pl = gf(5);
  LineAlgebra k = canonical_algebra(pl);
  DilationMap d = DilationMap::homothety(pl, pt(pl, 0, 0), pt(pl, 1, 0), pt(pl, 2, 0));
  CHECK(check_isomorphism(d, k).passed());
  DilationMap t = DilationMap::translation(pl, pt(pl, 0, 0), pt(pl, 2, 3));
  CHECK(check_isomorphism(t, k).passed());
  // identity too
  CHECK(check_isomorphism(DilationMap::identity(pl), k).passed());
}

TEST_CASE("enumeration finds exactly q^2 (q - 1) dilations") {
  CHECK(enumerate_dilations(gf(2)).size() == 4);
  CHECK(enumerate_dilations(gf(3)).size() == 18);
  CHECK(enumerate_dilations(gf(2, 2)).size() == 48);
  CHECK_THROWS_AS(enumerate_dilations(PlaneModel(Ring::quaternions())),
                  unsupported_operation);
}

TEST_CASE("quaternion dilations checked by sampling") {
  PlaneModel pl(Ring::quaternions());
  const Ring& h = pl.ring();
  LineAlgebra k = canonical_algebra(pl);
  Point v{h.quat_elem(1, 1, 0, 0), h.quat_elem(0, 0, mpq_class(1, 2), 0)};
  Point p{h.add(v.x, h.one()), v.y};
  RingElem ratio = h.quat_elem(0, 2, -1, mpq_class(3, 5));
  Point pi{h.add(v.x, ratio), v.y};  // V + (P - V) . ratio with P - V = 1
  DilationMap d = DilationMap::homothety(pl, v, p, pi);
  CHECK(check_isomorphism_sampled(d, k, 3, 50, 8).passed());
  DilationMap t = DilationMap::translation(pl, v, p);
  CHECK(check_isomorphism_sampled(t, k, 3, 50, 8).passed());
}
