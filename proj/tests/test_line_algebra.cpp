#include <doctest.h>

#include "skewplane/suites.hpp"

using namespace skewplane;

namespace {

PlaneModel gf(long p, int k = 1) { return PlaneModel(Ring::finite_field(p, k)); }

Point pt(const PlaneModel& pl, long x, long y) {
  return Point{pl.ring().from_int(x), pl.ring().from_int(y)};
}

}  // namespace

TEST_CASE("hand-checked sums, products, negations and inverses") {
  {
    PlaneModel pl = gf(3);
    LineAlgebra k = canonical_algebra(pl);
    CHECK(k.add(pt(pl, 1, 0), pt(pl, 2, 0)) == pt(pl, 0, 0));
    CHECK(k.add(pt(pl, 2, 0), pt(pl, 2, 0)) == pt(pl, 1, 0));
  }
  {
    PlaneModel pl = gf(5);
    LineAlgebra k = canonical_algebra(pl);
    CHECK(k.mul(pt(pl, 2, 0), pt(pl, 3, 0)) == pt(pl, 1, 0));
    CHECK(k.mul(pt(pl, 4, 0), pt(pl, 4, 0)) == pt(pl, 1, 0));
  }
  {
    PlaneModel pl = gf(7);
    LineAlgebra k = canonical_algebra(pl);
    CHECK(k.neg(pt(pl, 3, 0)) == pt(pl, 4, 0));
    CHECK(k.inv(pt(pl, 3, 0)) == pt(pl, 5, 0));
    CHECK(k.neg(pt(pl, 0, 0)) == pt(pl, 0, 0));
    CHECK_THROWS_AS(k.inv(pt(pl, 0, 0)), domain_error);
  }
}

TEST_CASE("operands must lie on the carrier line") {
  PlaneModel pl = gf(5);
  LineAlgebra k = canonical_algebra(pl);
  CHECK_THROWS_AS(k.add(pt(pl, 1, 1), pt(pl, 2, 0)), domain_error);
  CHECK_THROWS_AS(k.mul(pt(pl, 1, 0), pt(pl, 2, 3)), domain_error);
}

TEST_CASE("frame validation") {
  PlaneModel pl = gf(5);
  const Ring& r = pl.ring();
  Line x_axis = pl.make_line(r.zero(), r.one(), r.zero());
  CHECK_THROWS_AS(LineAlgebra(pl, x_axis, pt(pl, 0, 0), pt(pl, 0, 0)),
                  degenerate_input);
  CHECK_THROWS_AS(LineAlgebra(pl, x_axis, pt(pl, 0, 0), pt(pl, 1, 1)),
                  degenerate_input);
  // explicit auxiliary point must be off the line
  CHECK_THROWS_AS(LineAlgebra(pl, x_axis, pt(pl, 0, 0), pt(pl, 1, 0),
                              AuxPolicy::explicit_point, pt(pl, 3, 0)),
                  degenerate_input);
}

TEST_CASE("geometric tables match coordinate arithmetic on every small field") {
  for (auto [p, deg] : std::vector<std::pair<long, int>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    PlaneModel pl = gf(p, deg);
    const Ring& r = pl.ring();
    LineAlgebra k = canonical_algebra(pl);
    CAPTURE(p);
    CAPTURE(deg);
    for (const Point& a : k.points())
      for (const Point& c : k.points()) {
        CHECK(k.add(a, c).x == r.add(a.x, c.x));
        // the construction composes factors right-to-left
        CHECK(k.mul(a, c).x == r.mul(c.x, a.x));
      }
  }
}

TEST_CASE("the result does not depend on the auxiliary point") {
  PlaneModel pl = gf(5);
  LineAlgebra strict = canonical_algebra(pl, AuxPolicy::all_and_compare);
  LineAlgebra fast = canonical_algebra(pl);
  for (const Point& a : strict.points())
    for (const Point& c : strict.points()) {
      CHECK(strict.add(a, c) == fast.add(a, c));
      CHECK(strict.mul(a, c) == fast.mul(a, c));
    }
}

TEST_CASE("the construction works in any frame, not just the x-axis") {
  PlaneModel pl = gf(5);
  // carrier y = x, zero (0,0), one (1,1); the point at parameter t is (t, t)
  Line diag = pl.line_through(pt(pl, 0, 0), pt(pl, 1, 1));
  LineAlgebra k(pl, diag, pt(pl, 0, 0), pt(pl, 1, 1));
  CHECK(k.add(pt(pl, 2, 2), pt(pl, 3, 3)) == pt(pl, 0, 0));
  CHECK(k.mul(pt(pl, 2, 2), pt(pl, 3, 3)) == pt(pl, 1, 1));
  CHECK(k.inv(pt(pl, 2, 2)) == pt(pl, 3, 3));
  CHECK(verify_skewfield_exhaustive(k).passed());
}

TEST_CASE("skew-field axioms verify exhaustively on the canonical frame") {
  for (long p : {2L, 3L, 5L}) CHECK(verify_skewfield_exhaustive(canonical_algebra(gf(p))).passed());
  CHECK(verify_skewfield_exhaustive(canonical_algebra(gf(2, 2))).passed());
}

TEST_CASE("quaternion line: sums are componentwise, products reverse") {
  PlaneModel pl(Ring::quaternions());
  const Ring& h = pl.ring();
  LineAlgebra k = canonical_algebra(pl);
  RingElem i = h.quat_elem(0, 1, 0, 0);
  RingElem j = h.quat_elem(0, 0, 1, 0);
  RingElem kk = h.quat_elem(0, 0, 0, 1);
  Point A{i, h.zero()}, C{j, h.zero()};
  CHECK(k.add(A, C) == Point{h.add(i, j), h.zero()});
  // A * C carries x_C . x_A: (i,0) * (j,0) = (ji, 0) = (-k, 0)
  CHECK(k.mul(A, C) == Point{h.neg(kk), h.zero()});
  CHECK(k.mul(C, A) == Point{kk, h.zero()});
  // inverse of a unit quaternion point
  CHECK(k.inv(A) == Point{h.neg(i), h.zero()});
  // sampled axioms and auxiliary-independence on the infinite line
  CHECK(verify_skewfield_sampled(k, 5, 300, 8).passed());
  LineAlgebra strict = canonical_algebra(pl, AuxPolicy::all_and_compare);
  RingElem s = h.quat_elem(mpq_class(1, 2), 3, mpq_class(-2, 7), 0);
  CHECK(strict.mul(Point{s, h.zero()}, A) == k.mul(Point{s, h.zero()}, A));
}

TEST_CASE("cayley tables are the coordinate tables") {
  PlaneModel pl = gf(3);
  const Ring& r = pl.ring();
  LineAlgebra k = canonical_algebra(pl);
  CayleyTable add = cayley_table(k, '+');
  CayleyTable mul = cayley_table(k, '*');
  REQUIRE(add.labels == std::vector<std::string>{"0", "1", "2"});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(add.cells[i][j] ==
            r.to_string(r.add(r.element_at(i), r.element_at(j))));
      CHECK(mul.cells[i][j] ==
            r.to_string(r.mul(r.element_at(i), r.element_at(j))));
    }
  CHECK_THROWS_AS(cayley_table(k, '-'), domain_error);
  CHECK_THROWS_AS(cayley_table(canonical_algebra(PlaneModel(Ring::quaternions())), '+'),
                  unsupported_operation);
}
