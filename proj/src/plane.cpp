#include "skewplane/plane.hpp"

#include <sstream>

namespace skewplane {

Line PlaneModel::make_line(const RingElem& a, const RingElem& b, const RingElem& c) const {
  const Ring& r = ring_;
  if (!r.is_zero(a)) {
    RingElem ai = r.inv(a);
    return Line{r.one(), r.mul(ai, b), r.mul(ai, c)};
  }
  if (r.is_zero(b)) throw degenerate_input("line with a = b = 0");
  RingElem bi = r.inv(b);
  return Line{r.zero(), r.one(), r.mul(bi, c)};
}

Line PlaneModel::line_through(const Point& p, const Point& q) const {
  if (p == q) throw degenerate_input("line through coincident points");
  const Ring& r = ring_;
  if (p.x == q.x) return Line{r.one(), r.zero(), p.x};  // vertical: x = p.x
  // b = 1 form: a·x + y = c with a = (y2 - y1)·(x1 - x2)^{-1}
  RingElem a = r.mul(r.sub(q.y, p.y), r.inv(r.sub(p.x, q.x)));
  RingElem c = r.add(r.mul(a, p.x), p.y);
  return make_line(a, r.one(), c);
}

Line PlaneModel::parallel_through(const Point& p, const Line& l) const {
  RingElem c = ring_.add(ring_.mul(l.a, p.x), ring_.mul(l.b, p.y));
  return Line{l.a, l.b, c};
}

Intersection PlaneModel::intersect(const Line& l1, const Line& l2) const {
  const Ring& r = ring_;
  if (l1.a == l2.a && l1.b == l2.b) {
    if (l1.c == l2.c) return {Intersection::Kind::coincident, {}};
    return {Intersection::Kind::parallel, {}};
  }
  bool v1 = r.is_zero(l1.a), v2 = r.is_zero(l2.a);
  if (v1) {  // l1: y = c1
    RingElem y = l1.c;
    RingElem x = r.sub(l2.c, r.mul(l2.b, y));  // l2: x + b2·y = c2
    return {Intersection::Kind::point, Point{x, y}};
  }
  if (v2) {
    RingElem y = l2.c;
    RingElem x = r.sub(l1.c, r.mul(l1.b, y));
    return {Intersection::Kind::point, Point{x, y}};
  }
  // both x + b·y = c: (b1 - b2)·y = c1 - c2
  RingElem y = r.mul(r.inv(r.sub(l1.b, l2.b)), r.sub(l1.c, l2.c));
  RingElem x = r.sub(l1.c, r.mul(l1.b, y));
  return {Intersection::Kind::point, Point{x, y}};
}

bool PlaneModel::contains(const Line& l, const Point& p) const {
  return ring_.add(ring_.mul(l.a, p.x), ring_.mul(l.b, p.y)) == l.c;
}

bool PlaneModel::parallel(const Line& l1, const Line& l2) const {
  return l1.a == l2.a && l1.b == l2.b;
}

bool PlaneModel::collinear(const Point& p, const Point& q, const Point& r) const {
  if (p == q || p == r || q == r) return true;
  return contains(line_through(p, q), r);
}

std::size_t PlaneModel::point_count() const {
  std::size_t q = ring_.order();
  return q * q;
}

std::size_t PlaneModel::line_count() const {
  std::size_t q = ring_.order();
  return q * q + q;
}

Point PlaneModel::point_at(std::size_t idx) const {
  std::size_t q = ring_.order();
  if (idx >= q * q) throw domain_error("point index out of range");
  return Point{ring_.element_at(idx / q), ring_.element_at(idx % q)};
}

std::vector<Point> PlaneModel::points() const {
  std::size_t n = point_count();
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(point_at(i));
  return out;
}

std::vector<Line> PlaneModel::lines() const {
  std::size_t q = ring_.order();
  std::vector<Line> out;
  out.reserve(q * q + q);
  // slanted/vertical classes: x + b·y = c
  for (std::size_t bi = 0; bi < q; ++bi)
    for (std::size_t ci = 0; ci < q; ++ci)
      out.push_back(Line{ring_.one(), ring_.element_at(bi), ring_.element_at(ci)});
  // horizontal class: y = c
  for (std::size_t ci = 0; ci < q; ++ci)
    out.push_back(Line{ring_.zero(), ring_.one(), ring_.element_at(ci)});
  return out;
}

Point PlaneModel::point_on(const Line& l, const RingElem& t) const {
  if (ring_.is_zero(l.a)) return Point{t, l.c};  // y = c
  return Point{ring_.sub(l.c, ring_.mul(l.b, t)), t};
}

std::vector<Point> PlaneModel::points_on(const Line& l) const {
  std::vector<Point> out;
  out.reserve(ring_.order());
  for (const RingElem& t : ring_.elements()) out.push_back(point_on(l, t));
  return out;
}

Point PlaneModel::point_off(const Line& l, const Point& base) const {
  if (finite()) {
    std::size_t n = point_count();
    for (std::size_t i = 0; i < n; ++i) {
      Point p = point_at(i);
      if (!contains(l, p)) return p;
    }
    throw invariant_violation("no point off a line");
  }
  Point up = translate(base, ring_.zero(), ring_.one());
  if (!contains(l, up)) return up;
  Point right = translate(base, ring_.one(), ring_.zero());
  if (!contains(l, right)) return right;
  // two distinct directions from one point cannot both stay on a line
  throw invariant_violation("no canonical offset off the line");
}

Point PlaneModel::translate(const Point& p, const RingElem& dx, const RingElem& dy) const {
  return Point{ring_.add(p.x, dx), ring_.add(p.y, dy)};
}

std::string PlaneModel::to_string(const Point& p) const {
  std::ostringstream os;
  os << "(" << ring_.to_string(p.x) << "; " << ring_.to_string(p.y) << ")";
  return os.str();
}

std::string PlaneModel::to_string(const Line& l) const {
  std::ostringstream os;
  os << "[" << ring_.to_string(l.a) << " | " << ring_.to_string(l.b) << " | "
     << ring_.to_string(l.c) << "]";
  return os.str();
}

}  // namespace skewplane
