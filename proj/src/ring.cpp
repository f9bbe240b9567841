#include "skewplane/ring.hpp"

#include <algorithm>
#include <sstream>

namespace skewplane {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int mod_p(long v, long p) {
  long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

long mod_inverse(long a, long p) {
  // extended Euclid over Z_p
  long t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
  while (new_r != 0) {
    long q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) throw domain_error("element has no inverse mod p");
  return mod_p(t, p);
}

int poly_degree(const std::vector<int>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

std::vector<int> poly_mul(const std::vector<int>& f, const std::vector<int>& g, long p) {
  if (f.empty() || g.empty()) return {};
  std::vector<int> out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = mod_p(out[i + j] + static_cast<long>(f[i]) * g[j], p);
  return out;
}

// f mod g, g monic in its top stored coefficient
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, long p) {
  int dg = poly_degree(g);
  for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
    int lead = f[df];
    for (int i = 0; i <= dg; ++i)
      f[df - dg + i] = mod_p(f[df - dg + i] - static_cast<long>(lead) * g[i], p);
  }
  f.resize(std::max(dg, 1));
  return f;
}

// returns (q, r) with f = q*g + r; g need not be monic
std::pair<std::vector<int>, std::vector<int>> poly_divmod(std::vector<int> f,
                                                          const std::vector<int>& g, long p) {
  int dg = poly_degree(g);
  if (dg < 0) throw domain_error("polynomial division by zero");
  long glead_inv = mod_inverse(g[dg], p);
  std::vector<int> q(f.size(), 0);
  for (int df = poly_degree(f); df >= dg; df = poly_degree(f)) {
    long c = mod_p(static_cast<long>(f[df]) * glead_inv, p);
    q[df - dg] = static_cast<int>(c);
    for (int i = 0; i <= dg; ++i) f[df - dg + i] = mod_p(f[df - dg + i] - c * g[i], p);
  }
  return {q, f};
}

mpq_class quat_norm(const Quat& q) {
  return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw construction_error("bad rational: '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

bool quat_less(const Quat& lhs, const Quat& rhs) {
  if (int c = cmp(lhs.a, rhs.a); c != 0) return c < 0;
  if (int c = cmp(lhs.b, rhs.b); c != 0) return c < 0;
  if (int c = cmp(lhs.c, rhs.c); c != 0) return c < 0;
  return cmp(lhs.d, rhs.d) < 0;
}

bool operator<(const RingElem& lhs, const RingElem& rhs) {
  if (lhs.is_finite() != rhs.is_finite()) return lhs.is_finite();
  if (lhs.is_finite()) return lhs.coeffs() < rhs.coeffs();
  return quat_less(lhs.quat(), rhs.quat());
}

namespace detail {

bool poly_irreducible(long p, const std::vector<int>& poly) {
  int deg = poly_degree(poly);
  if (deg < 1) return false;
  if (deg == 1) return true;
  // enumerate monic divisor candidates of degree d, low coefficients as a
  // base-p odometer
  for (int d = 1; d <= deg / 2; ++d) {
    std::vector<int> cand(d + 1, 0);
    cand[d] = 1;
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(p);
    for (std::size_t n = 0; n < count; ++n) {
      std::size_t v = n;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(v % p);
        v /= p;
      }
      if (poly_degree(poly_mod(poly, cand, p)) < 0) return false;
    }
  }
  return true;
}

}  // namespace detail

Ring Ring::finite_field(long p, int k) {
  if (!is_prime(p)) throw construction_error("characteristic must be prime");
  if (k < 1) throw construction_error("extension degree must be positive");
  // lexicographically least monic irreducible, coefficients compared
  // low-to-high degree: c0 is the most significant position
  std::vector<int> mod(k + 1, 0);
  mod[k] = 1;
  std::size_t count = 1;
  for (int i = 0; i < k; ++i) count *= static_cast<std::size_t>(p);
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t v = n;
    for (int i = k - 1; i >= 0; --i) {
      mod[i] = static_cast<int>(v % p);
      v /= p;
    }
    if (detail::poly_irreducible(p, mod)) return finite_field(p, k, mod);
  }
  throw construction_error("no irreducible modulus found");  // unreachable
}

Ring Ring::finite_field(long p, int k, std::vector<int> modulus) {
  if (!is_prime(p)) throw construction_error("characteristic must be prime");
  if (k < 1) throw construction_error("extension degree must be positive");
  if (modulus.size() != static_cast<std::size_t>(k) + 1 || modulus[k] != 1)
    throw construction_error("modulus must be monic of degree k");
  for (int& c : modulus) c = mod_p(c, p);
  if (modulus[k] != 1) throw construction_error("modulus must be monic of degree k");
  if (!detail::poly_irreducible(p, modulus))
    throw construction_error("modulus is reducible over GF(p)");
  Ring r;
  r.kind_ = RingKind::finite_field;
  r.p_ = p;
  r.k_ = k;
  r.modulus_ = std::move(modulus);
  return r;
}

Ring Ring::quaternions() {
  Ring r;
  r.kind_ = RingKind::rational_quaternion;
  return r;
}

std::size_t Ring::order() const {
  if (!finite()) throw unsupported_operation("quaternion ring is infinite");
  std::size_t n = 1;
  for (int i = 0; i < k_; ++i) n *= static_cast<std::size_t>(p_);
  return n;
}

RingElem Ring::zero() const {
  if (finite()) return RingElem(std::vector<int>(k_, 0));
  return RingElem(Quat{0, 0, 0, 0});
}

RingElem Ring::one() const { return from_int(1); }

RingElem Ring::from_int(long n) const {
  if (finite()) {
    std::vector<int> c(k_, 0);
    c[0] = mod_p(n, p_);
    return RingElem(std::move(c));
  }
  return RingElem(Quat{mpq_class(n), 0, 0, 0});
}

RingElem Ring::quat_elem(mpq_class a, mpq_class b, mpq_class c, mpq_class d) const {
  if (finite()) throw unsupported_operation("quaternion element in a finite field");
  a.canonicalize();
  b.canonicalize();
  c.canonicalize();
  d.canonicalize();
  return RingElem(Quat{a, b, c, d});
}

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  if (finite()) {
    std::vector<int> out(k_);
    for (int i = 0; i < k_; ++i) out[i] = mod_p(a.coeffs()[i] + b.coeffs()[i], p_);
    return RingElem(std::move(out));
  }
  const Quat &x = a.quat(), &y = b.quat();
  return RingElem(Quat{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d});
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }

RingElem Ring::neg(const RingElem& a) const {
  if (finite()) {
    std::vector<int> out(k_);
    for (int i = 0; i < k_; ++i) out[i] = mod_p(-a.coeffs()[i], p_);
    return RingElem(std::move(out));
  }
  const Quat& x = a.quat();
  return RingElem(Quat{-x.a, -x.b, -x.c, -x.d});
}

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  if (finite()) {
    std::vector<int> prod = poly_mod(poly_mul(a.coeffs(), b.coeffs(), p_), modulus_, p_);
    prod.resize(k_, 0);
    return RingElem(std::move(prod));
  }
  const Quat &x = a.quat(), &y = b.quat();
  // Hamilton product
  return RingElem(Quat{x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                       x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                       x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                       x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a});
}

RingElem Ring::inv(const RingElem& a) const {
  if (is_zero(a)) throw domain_error("inverse of zero");
  if (finite()) {
    // extended Euclid in GF(p)[x]: s*a + t*modulus = gcd = const
    std::vector<int> r0 = modulus_, r1 = a.coeffs();
    std::vector<int> s0{0}, s1{1};
    while (poly_degree(r1) > 0) {
      auto [q, rem] = poly_divmod(r0, r1, p_);
      std::vector<int> qs1 = poly_mul(q, s1, p_);
      std::vector<int> s2(std::max(s0.size(), qs1.size()), 0);
      for (std::size_t i = 0; i < s2.size(); ++i) {
        int v = i < s0.size() ? s0[i] : 0;
        int w = i < qs1.size() ? qs1[i] : 0;
        s2[i] = mod_p(v - w, p_);
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (poly_degree(r1) != 0)
      throw invariant_violation("gcd with irreducible modulus is not constant");
    long c_inv = mod_inverse(r1[0], p_);
    std::vector<int> out = poly_mod(s1, modulus_, p_);
    out.resize(k_, 0);
    for (int& c : out) c = mod_p(static_cast<long>(c) * c_inv, p_);
    return RingElem(std::move(out));
  }
  // conjugate over reduced norm; norm zero iff element zero for rationals
  const Quat& x = a.quat();
  mpq_class n = quat_norm(x);
  if (n == 0) throw invariant_violation("nonzero quaternion with zero norm");
  return RingElem(Quat{x.a / n, -x.b / n, -x.c / n, -x.d / n});
}

bool Ring::is_zero(const RingElem& a) const { return a == zero(); }
bool Ring::is_one(const RingElem& a) const { return a == one(); }

std::vector<RingElem> Ring::elements() const {
  std::size_t n = order();
  std::vector<RingElem> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

RingElem Ring::element_at(std::size_t idx) const {
  if (!finite()) throw unsupported_operation("cannot enumerate the quaternion ring");
  std::vector<int> c(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    c[i] = static_cast<int>(idx % p_);
    idx /= static_cast<std::size_t>(p_);
  }
  if (idx != 0) throw domain_error("element index out of range");
  return RingElem(std::move(c));
}

std::size_t Ring::index_of(const RingElem& a) const {
  if (!finite()) throw unsupported_operation("cannot index the quaternion ring");
  std::size_t idx = 0;
  for (int i = 0; i < k_; ++i) idx = idx * static_cast<std::size_t>(p_) + a.coeffs()[i];
  return idx;
}

std::string Ring::to_string(const RingElem& a) const {
  std::ostringstream os;
  if (finite()) {
    for (int i = 0; i < k_; ++i) {
      if (i) os << ',';
      os << a.coeffs()[i];
    }
  } else {
    const Quat& q = a.quat();
    os << q.a.get_str() << ' ' << q.b.get_str() << ' ' << q.c.get_str() << ' '
       << q.d.get_str();
  }
  return os.str();
}

RingElem Ring::parse(const std::string& text) const {
  std::istringstream is(text);
  if (finite()) {
    std::vector<int> c;
    std::string tok;
    while (std::getline(is, tok, ',')) c.push_back(mod_p(std::stol(tok), p_));
    if (c.size() != static_cast<std::size_t>(k_))
      throw construction_error("expected " + std::to_string(k_) + " coefficients");
    return RingElem(std::move(c));
  }
  std::string sa, sb, sc, sd;
  if (!(is >> sa >> sb >> sc >> sd))
    throw construction_error("expected four rational components");
  return RingElem(
      Quat{parse_rational(sa), parse_rational(sb), parse_rational(sc), parse_rational(sd)});
}

std::string Ring::describe() const {
  if (!finite()) return "rational quaternions";
  std::ostringstream os;
  os << "GF(" << p_;
  if (k_ > 1) os << "^" << k_;
  os << ")";
  return os.str();
}

}  // namespace skewplane
