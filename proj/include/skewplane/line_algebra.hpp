#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "skewplane/parallel.hpp"
#include "skewplane/plane.hpp"
#include "skewplane/report.hpp"

namespace skewplane {

enum class AuxPolicy {
  deterministic_first,  // first point off the line in canonical order
  explicit_point,       // caller-provided auxiliary point
  all_and_compare       // run every admissible auxiliary, demand agreement
};

/// The skew-field K = (l, +, *) carried by the points of a line, with chosen
/// zero O and one I. Addition and multiplication are the three-step
/// parallel-transport constructions through an auxiliary point off the line.
/// Immutable; all operations are pure.
class LineAlgebra {
public:
  LineAlgebra(PlaneModel plane, Line l, Point zero, Point one,
              AuxPolicy policy = AuxPolicy::deterministic_first,
              std::optional<Point> aux = std::nullopt,
              std::uint64_t compare_seed = 0, std::size_t compare_samples = 100);

  const PlaneModel& plane() const { return plane_; }
  const Line& carrier() const { return line_; }
  const Point& zero() const { return zero_; }
  const Point& one() const { return one_; }
  AuxPolicy policy() const { return policy_; }
  /// Primary auxiliary point (off the carrier line).
  const Point& auxiliary() const { return aux_; }

  /// A + C: auxiliary B off l, D = l^B_l ∩ l^A_OB, result = l^D_CB ∩ l.
  Point add(const Point& a, const Point& c) const;
  /// A * C: auxiliary B off l, D = l^A_IB ∩ OB, result = l^D_BC ∩ l.
  Point mul(const Point& a, const Point& c) const;
  /// -A: with B, D as in addition, the parallel through B to DO meets l at -A.
  Point neg(const Point& a) const;
  /// A^{-1} (A != O): with D as in multiplication, the parallel through B to
  /// DI meets l at the inverse. On finite lines an exhaustive search
  /// cross-checks the geometric answer; a discrepancy is a hard failure.
  Point inv(const Point& a) const;

  /// The q points of a finite carrier line, canonical order.
  std::vector<Point> points() const;

private:
  Point require_on_line(const Point& p, const char* role) const;
  std::vector<Point> aux_candidates() const;
  Point add_with(const Point& aux, const Point& a, const Point& c) const;
  Point mul_with(const Point& aux, const Point& a, const Point& c) const;
  Point run(const Point& a, const Point& c, bool multiply) const;

  PlaneModel plane_;
  Line line_;
  Point zero_, one_;
  AuxPolicy policy_;
  Point aux_;
  std::uint64_t compare_seed_;
  std::size_t compare_samples_;
};

/// Additive abelian group, multiplicative group on l \ {O}, two-sided
/// distributivity; commutativity of * reported as informational.
Report verify_skewfield_exhaustive(const LineAlgebra& k, Exec exec = Exec::parallel);
Report verify_skewfield_sampled(const LineAlgebra& k, std::uint64_t seed,
                                std::size_t samples, int rational_bound);

struct CayleyTable {
  std::vector<std::string> labels;               // x-coordinates, canonical order
  std::vector<std::vector<std::string>> cells;   // q x q result labels
};

CayleyTable cayley_table(const LineAlgebra& k, char op);  // '+' or '*'
/// CSV with a header row of point labels; atomic write (temp then rename).
void write_csv(const CayleyTable& table, const std::filesystem::path& path);

}  // namespace skewplane
