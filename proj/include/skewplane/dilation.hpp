#pragma once

#include <cstdint>
#include <vector>

#include "skewplane/line_algebra.hpp"
#include "skewplane/plane.hpp"
#include "skewplane/report.hpp"

namespace skewplane {

enum class DilationKind { identity, translation, homothety };

/// A dilation given by generators, applied by synthetic trace construction:
/// a homothety by its fixed point V and a reference pair P -> P' collinear
/// with V, a translation by a reference pair alone. Every line maps to a
/// parallel line. Immutable.
class DilationMap {
public:
  static DilationMap identity(PlaneModel plane);
  static DilationMap translation(PlaneModel plane, Point p, Point p_image);
  static DilationMap homothety(PlaneModel plane, Point fixed, Point p, Point p_image);

  DilationKind kind() const { return kind_; }
  const PlaneModel& plane() const { return plane_; }
  const Point& fixed_point() const;  // homothety only
  const Point& ref() const { return p_; }
  const Point& ref_image() const { return p_image_; }

  Point apply(const Point& q) const;
  Line apply(const Line& l) const;

private:
  DilationMap(DilationKind kind, PlaneModel plane) : kind_(kind), plane_(std::move(plane)) {}

  Point apply_homothety(const Point& q) const;
  Point apply_translation(const Point& q) const;

  DilationKind kind_;
  PlaneModel plane_;
  Point v_, p_, p_image_;
};

/// Restriction of a dilation to a line: the image line and, on finite planes,
/// the full point-to-point mapping.
struct Restriction {
  Line source, image;
  std::vector<std::pair<Point, Point>> pairs;  // finite planes only
};

Restriction restrict(const DilationMap& d, const Line& l);
/// Finite planes: verifies the restriction is injective and surjective onto
/// the image line by exhaustive image count.
Report check_restriction_bijective(const DilationMap& d, const Line& l);

/// With K2 framed at (d(O), d(I)) on d(l1), both homomorphism
/// equations d(A+C) = d(A)+d(C) and d(A*C) = d(A)*d(C) hold for point pairs
/// of l1 (finite: all pairs; infinite: `samples` seeded pairs).
Report check_isomorphism(const DilationMap& d, const LineAlgebra& k1,
                         Exec exec = Exec::parallel);
Report check_isomorphism_sampled(const DilationMap& d, const LineAlgebra& k1,
                                 std::uint64_t seed, std::size_t samples,
                                 int rational_bound);

/// All dilations of a finite plane: the identity, every translation, every
/// homothety; deduplicated by pointwise equality on the full point set.
std::vector<DilationMap> enumerate_dilations(const PlaneModel& plane);

}  // namespace skewplane
