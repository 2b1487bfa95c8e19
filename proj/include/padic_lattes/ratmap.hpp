#pragma once

#include <padic_lattes/poly_gcd.hpp>
#include <padic_lattes/projpoint.hpp>
#include <padic_lattes/upoly.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace padic_lattes {

/// Rational self-map of the projective line, stored as a coprime
/// numerator/denominator pair. The pair is normalized to primitive
/// integer polynomials with a positive leading denominator coefficient,
/// which makes printing canonical.
class RatMap {
 public:
  RatMap(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero() && den_.is_zero())
      throw std::domain_error("RatMap: 0/0 is not a map");
    if (den_.is_zero()) throw std::domain_error("RatMap: zero denominator");
    UPoly g = poly_gcd(num_.is_zero() ? den_ : num_, den_);
    if (!num_.is_zero() && g.degree() > 0) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
    normalize_scale();
    if (degree() < 1) throw std::domain_error("RatMap: degree must be >= 1");
  }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  long degree() const { return std::max(num_.degree(), den_.degree()); }
  char var() const { return den_.var(); }

  friend bool operator==(const RatMap& a, const RatMap& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatMap& a, const RatMap& b) { return !(a == b); }

  /// Exact image of a projective point; indeterminacy cannot occur
  /// because the pair is coprime.
  ProjPoint eval(const ProjPoint& pt) const {
    const long d = degree();
    if (pt.is_infinity()) {
      const Rat nh = num_.coeff(static_cast<std::size_t>(d));
      const Rat dh = den_.coeff(static_cast<std::size_t>(d));
      if (dh.is_zero()) return ProjPoint::infinity();
      return ProjPoint(nh / dh);
    }
    const Rat n = num_.eval(pt.affine());
    const Rat dv = den_.eval(pt.affine());
    if (dv.is_zero()) {
      if (n.is_zero())
        throw std::logic_error("RatMap: unexpected indeterminacy");
      return ProjPoint::infinity();
    }
    return ProjPoint(n / dv);
  }

  /// f(P/Q) written as a single fraction, before gcd reduction.
  std::pair<UPoly, UPoly> compose_fraction(const UPoly& P,
                                           const UPoly& Q) const {
    const long d = degree();
    std::vector<UPoly> qpow(static_cast<std::size_t>(d) + 1, UPoly::one(P.var()));
    for (long i = 1; i <= d; ++i)
      qpow[static_cast<std::size_t>(i)] = qpow[static_cast<std::size_t>(i - 1)] * Q;
    // Horner in P: sum c_i P^i Q^(d-i).
    UPoly n = UPoly::zero(P.var()), dn = UPoly::zero(P.var());
    for (long i = d; i >= 0; --i) {
      const auto& qk = qpow[static_cast<std::size_t>(d - i)];
      n = n * P + num_.coeff(static_cast<std::size_t>(i)) * qk;
      dn = dn * P + den_.coeff(static_cast<std::size_t>(i)) * qk;
    }
    return {n, dn};
  }

  /// Compositional iterate f^n as a reduced map.
  RatMap iterate(unsigned n) const {
    RatMap acc = *this;
    if (n == 0) return RatMap(UPoly::variable(var()), UPoly::one(var()));
    for (unsigned i = 1; i < n; ++i) acc = compose(*this, acc);
    return acc;
  }

  static RatMap compose(const RatMap& f, const RatMap& g) {
    auto [n, d] = f.compose_fraction(g.num_, g.den_);
    return RatMap(std::move(n), std::move(d));
  }

  /// 1/f(1/w) as a map in w.
  RatMap reciprocal_conjugate() const {
    const std::size_t d = static_cast<std::size_t>(degree());
    return RatMap(reverse(den_, d), reverse(num_, d));
  }

  std::string str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

 private:
  static UPoly reverse(const UPoly& p, std::size_t d) {
    std::vector<Rat> c(d + 1);
    for (std::size_t i = 0; i <= d; ++i) c[d - i] = p.coeff(i);
    return UPoly(std::move(c), p.var());
  }

  void normalize_scale() {
    auto [sn, vn] = num_.primitive_int();
    auto [sd, vd] = den_.primitive_int();
    // num = sn*VN, den = sd*VD with VN, VD primitive and positive lead.
    // With sn/sd = u/w in lowest terms, f = (u*VN)/(w*VD) is an integer
    // pair with no common content and positive denominator lead.
    const Rat r = sn / sd;
    num_ = Rat(r.num()) * UPoly::from_int_coeffs(vn, num_.var());
    den_ = Rat(r.den()) * UPoly::from_int_coeffs(vd, den_.var());
  }

  UPoly num_;
  UPoly den_;
};

/// M^{-1} o f o M for a degree-1 map M.
inline RatMap mobius_conjugate(const RatMap& f, const RatMap& m) {
  if (m.degree() != 1)
    throw std::domain_error("mobius_conjugate: M must have degree 1");
  const Rat a = m.num().coeff(1), b = m.num().coeff(0);
  const Rat c = m.den().coeff(1), d = m.den().coeff(0);
  if ((a * d - b * c).is_zero())
    throw std::domain_error("mobius_conjugate: M is not invertible");
  RatMap minv(UPoly({-b, d}, m.var()), UPoly({a, -c}, m.var()));
  return RatMap::compose(minv, RatMap::compose(f, m));
}

/// Power-series coefficients c_0..c_order of f at a finite center,
/// in the local coordinate (z - center).
inline std::vector<Rat> series_expand(const RatMap& f, const Rat& center,
                                      long order) {
  if (order < 0) throw std::domain_error("series_expand: negative order");
  UPoly n = f.num().taylor_shift(center);
  UPoly d = f.den().taylor_shift(center);
  if (d.coeff(0).is_zero())
    throw std::domain_error("series_expand: pole at the center");
  const Rat inv0 = d.coeff(0).inverse();
  std::vector<Rat> inv(static_cast<std::size_t>(order) + 1);
  inv[0] = inv0;
  for (long k = 1; k <= order; ++k) {
    Rat s(0);
    for (long j = 1; j <= k; ++j)
      s += d.coeff(static_cast<std::size_t>(j)) *
           inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = -inv0 * s;
  }
  std::vector<Rat> out(static_cast<std::size_t>(order) + 1);
  for (long k = 0; k <= order; ++k) {
    Rat s(0);
    for (long j = 0; j <= k; ++j)
      s += n.coeff(static_cast<std::size_t>(j)) *
           inv[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = s;
  }
  return out;
}

/// Derivative f'(x) at a finite non-pole point.
inline Rat derivative_at(const RatMap& f, const Rat& x) {
  const Rat n = f.num().eval(x), d = f.den().eval(x);
  if (d.is_zero()) throw std::domain_error("derivative_at: pole");
  const Rat np = f.num().derivative().eval(x), dp = f.den().derivative().eval(x);
  return (np * d - n * dp) / (d * d);
}

/// Multiplier of f at a fixed point (checked exactly; infinity handled
/// through the coordinate change w = 1/z).
inline Rat multiplier_at(const RatMap& f, const ProjPoint& pt) {
  if (f.eval(pt) != pt)
    throw std::domain_error("multiplier_at: point is not fixed");
  if (pt.is_infinity())
    return derivative_at(f.reciprocal_conjugate(), Rat(0));
  return derivative_at(f, pt.affine());
}

}  // namespace padic_lattes
