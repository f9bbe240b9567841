#pragma once

#include <cstdint>
#include <random>

#include "skewplane/plane.hpp"

namespace skewplane {

/// Seeded deterministic sampler. Bounded draws use plain modulo reduction so
/// that a (config, seed) pair reproduces byte-for-byte on any platform;
/// uniformity bias is irrelevant for the search workloads here.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed, int rational_bound = 8)
      : rng_(seed), bound_(rational_bound) {}

  int rational_bound() const { return bound_; }

  std::uint64_t next(std::uint64_t n) { return rng_() % n; }

  /// Finite field: uniform element. Quaternions: four components with
  /// numerator in [-bound, bound] and denominator in [1, bound].
  RingElem element(const Ring& r) {
    if (r.finite()) return r.element_at(next(r.order()));
    return r.quat_elem(rational(), rational(), rational(), rational());
  }

  RingElem nonzero_element(const Ring& r) {
    for (;;) {
      RingElem e = element(r);
      if (!r.is_zero(e)) return e;
    }
  }

  mpq_class rational() {
    long num = static_cast<long>(next(2 * bound_ + 1)) - bound_;
    long den = static_cast<long>(next(bound_)) + 1;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  Point point(const PlaneModel& plane) {
    return Point{element(plane.ring()), element(plane.ring())};
  }

  Point point_on(const PlaneModel& plane, const Line& l) {
    return plane.point_on(l, element(plane.ring()));
  }

  Line line(const PlaneModel& plane) {
    const Ring& r = plane.ring();
    if (next(plane.ring().finite() ? r.order() + 1 : 8) == 0)
      return Line{r.zero(), r.one(), element(r)};  // y = c class
    return Line{r.one(), element(r), element(r)};
  }

private:
  std::mt19937_64 rng_;
  int bound_;
};

}  // namespace skewplane
