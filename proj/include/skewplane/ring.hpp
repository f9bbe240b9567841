#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "skewplane/errors.hpp"

namespace skewplane {

enum class RingKind { finite_field, rational_quaternion };

/// Exact rational quaternion a + bi + cj + dk. Components are kept canonical
/// (lowest terms, positive denominator) by mpq_class.
struct Quat {
  mpq_class a, b, c, d;

  friend bool operator==(const Quat&, const Quat&) = default;
};

bool quat_less(const Quat& lhs, const Quat& rhs);

/// Element of a division ring. Finite-field elements are coefficient vectors
/// of length k over Z_p (low degree first, reduced mod p); quaternion elements
/// are four exact rationals.
class RingElem {
public:
  RingElem() = default;
  explicit RingElem(std::vector<int> coeffs) : v_(std::move(coeffs)) {}
  explicit RingElem(Quat q) : v_(std::move(q)) {}

  bool is_finite() const { return std::holds_alternative<std::vector<int>>(v_); }
  const std::vector<int>& coeffs() const { return std::get<std::vector<int>>(v_); }
  const Quat& quat() const { return std::get<Quat>(v_); }

  friend bool operator==(const RingElem&, const RingElem&) = default;
  friend bool operator<(const RingElem& lhs, const RingElem& rhs);

private:
  std::variant<std::vector<int>, Quat> v_;
};

/// Descriptor + arithmetic context for a division ring: a finite field
/// GF(p^k) with an explicit irreducible modulus, or the rational quaternions.
/// Immutable after construction; all operations are pure.
class Ring {
public:
  /// GF(p^k) with the lexicographically least monic irreducible modulus of
  /// degree k (coefficients compared low-to-high degree).
  static Ring finite_field(long p, int k);
  /// GF(p^k) with an explicit monic modulus, validated for irreducibility.
  /// `modulus` has length k+1, low degree first, modulus[k] == 1.
  static Ring finite_field(long p, int k, std::vector<int> modulus);
  static Ring quaternions();

  RingKind kind() const { return kind_; }
  bool finite() const { return kind_ == RingKind::finite_field; }
  long p() const { return p_; }
  int k() const { return k_; }
  const std::vector<int>& modulus() const { return modulus_; }

  /// Number of elements p^k; throws unsupported_operation for quaternions.
  std::size_t order() const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(long n) const;
  RingElem quat_elem(mpq_class a, mpq_class b, mpq_class c, mpq_class d) const;

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  /// Two-sided inverse; throws domain_error on zero.
  RingElem inv(const RingElem& a) const;

  bool is_zero(const RingElem& a) const;
  bool is_one(const RingElem& a) const;

  /// All elements of a finite field, coefficient-lexicographic order
  /// (element_at(i) for i in [0, order())). Throws on quaternions.
  std::vector<RingElem> elements() const;
  RingElem element_at(std::size_t idx) const;
  std::size_t index_of(const RingElem& a) const;

  /// Textual syntax: finite "c0,c1,...,c{k-1}"; quaternion "a b c d" with
  /// each component "num/den" (or a plain integer).
  std::string to_string(const RingElem& a) const;
  RingElem parse(const std::string& text) const;

  std::string describe() const;

  friend bool operator==(const Ring&, const Ring&) = default;

private:
  Ring() = default;

  RingKind kind_ = RingKind::finite_field;
  long p_ = 0;
  int k_ = 0;
  std::vector<int> modulus_;  // length k+1, monic, low degree first
};

namespace detail {
/// Monic polynomial irreducibility over GF(p) by trial division against every
/// monic polynomial of degree 1..deg/2. Poly is low-degree-first, monic.
bool poly_irreducible(long p, const std::vector<int>& poly);
}  // namespace detail

}  // namespace skewplane
