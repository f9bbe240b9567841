#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewplane/ring.hpp"

namespace skewplane {

struct Point {
  RingElem x, y;

  friend bool operator==(const Point&, const Point&) = default;
  friend bool operator<(const Point& lhs, const Point& rhs) {
    if (lhs.x == rhs.x) return lhs.y < rhs.y;
    return lhs.x < rhs.x;
  }
};

/// Line {(x, y) : a·x + b·y = c} with coefficients multiplying on the left.
/// Canonical form: a == 1, or a == 0 and b == 1. Two lines are equal as point
/// sets iff structurally equal.
struct Line {
  RingElem a, b, c;

  friend bool operator==(const Line&, const Line&) = default;
  friend bool operator<(const Line& lhs, const Line& rhs) {
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    return lhs.c < rhs.c;
  }
};

struct Intersection {
  enum class Kind { point, parallel, coincident };
  Kind kind;
  Point p;  // valid only when kind == point
};

/// Coordinate affine plane AG(2, D) over a division ring D.
class PlaneModel {
public:
  explicit PlaneModel(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const { return ring_; }
  bool finite() const { return ring_.finite(); }

  Line make_line(const RingElem& a, const RingElem& b, const RingElem& c) const;

  /// Unique line through two distinct points; throws degenerate_input on P == Q.
  Line line_through(const Point& p, const Point& q) const;

  /// Unique line through P parallel to l (l itself when P lies on l).
  Line parallel_through(const Point& p, const Line& l) const;

  Intersection intersect(const Line& l1, const Line& l2) const;

  bool contains(const Line& l, const Point& p) const;

  /// Equal or disjoint. With the canonical form this is equality of (a, b).
  bool parallel(const Line& l1, const Line& l2) const;

  bool collinear(const Point& p, const Point& q, const Point& r) const;

  std::size_t point_count() const;  // q^2
  std::size_t line_count() const;   // q^2 + q
  Point point_at(std::size_t idx) const;
  std::vector<Point> points() const;
  std::vector<Line> lines() const;
  /// The q points of a line, canonical (parameter-enumeration) order.
  std::vector<Point> points_on(const Line& l) const;
  /// Point of l at parameter t: y = t on slanted lines, x = t on y = c lines.
  Point point_on(const Line& l, const RingElem& t) const;

  /// First point off l in canonical enumeration order (finite planes), or the
  /// offset of `base` by the first of the directions (0,1), (1,0) that leaves
  /// l (quaternion plane).
  Point point_off(const Line& l, const Point& base) const;

  Point translate(const Point& p, const RingElem& dx, const RingElem& dy) const;

  std::string to_string(const Point& p) const;
  std::string to_string(const Line& l) const;

private:
  Ring ring_;
};

}  // namespace skewplane
