#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "skewplane/checks.hpp"
#include "skewplane/dilation.hpp"
#include "skewplane/line_algebra.hpp"
#include "skewplane/report.hpp"

namespace skewplane {

/// Canonical line frame: l: y = 0 with O = (0, 0) and I = (1, 0).
LineAlgebra canonical_algebra(const PlaneModel& plane,
                              AuxPolicy policy = AuxPolicy::deterministic_first);

struct SuiteConfig {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  int rational_bound = 8;
  Exec exec = Exec::parallel;
};

/// One of: axioms, desargues, pappus, pappus-countermodel, skewfield,
/// dilation-iso. Throws unsupported_operation on a suite/plane mismatch
/// (exhaustive mode or countermodel hunt on the wrong plane kind).
Report run_suite(const PlaneModel& plane, const std::string& suite,
                 const SuiteConfig& cfg);

/// Expansion of --suite all for the given plane kind.
std::vector<std::string> all_suites(const PlaneModel& plane);

/// Per-dilation isomorphism + bijectivity sweep over every enumerated
/// dilation of a finite plane, against the canonical frame.
Report check_all_dilations(const PlaneModel& plane, Exec exec = Exec::parallel);

struct WitnessResult {
  std::optional<std::pair<Point, Point>> noncommutative;  // A, C with A*C != C*A
  Point prod_ac, prod_ca;
  std::optional<PappusConfig> pappus;
  std::size_t noncomm_tried = 0, pappus_tried = 0;
};

/// Quaternion-plane witness hunt: a non-commutative pair for the constructed
/// line multiplication and a Pappus-violating configuration, each re-verified.
WitnessResult find_witnesses(const PlaneModel& plane, std::uint64_t seed,
                             std::size_t budget, int rational_bound);

void write_witness_file(const PlaneModel& plane, const WitnessResult& w,
                        const std::filesystem::path& path);

}  // namespace skewplane
