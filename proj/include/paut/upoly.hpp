#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paut/ext_int.hpp"
#include "paut/field.hpp"
#include "paut/poly.hpp"

namespace paut {

// Dense univariate polynomial over the base field, coefficients from degree 0 upward.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Field f) : field_(f) {}
  UPoly(Field f, std::vector<Scalar> coeffs);
  static UPoly constant(const Scalar& c) { return UPoly(c.field(), {c}); }
  static UPoly monomial(const Scalar& c, int k);
  static UPoly x(Field f) { return monomial(Scalar::one(f), 1); }

  Field field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1); }
  Scalar coeff(int k) const;
  Scalar lead() const;
  std::span<const Scalar> coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Scalar& s) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  // this(g(x))
  UPoly compose(const UPoly& g) const;
  // this(a*x + b)
  UPoly affine_arg(const Scalar& a, const Scalar& b) const;
  UPoly shift(const Scalar& c) const { return affine_arg(Scalar::one(field_), c); }
  UPoly pow(unsigned e) const;
  Scalar evaluate(const Scalar& x) const;
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly monic() const;
  UPoly derivative() const;
  static UPoly gcd(UPoly a, UPoly b);

  // As a polynomial in variable `var` of an nvars-variable ring.
  ScalarPoly to_poly(int nvars, int var) const;
  // Throws DomainError if p involves any other variable.
  static UPoly from_poly(const ScalarPoly& p, int var);

  // this(arg) for a polynomial argument over Scalar or Laurent coefficients.
  template <class C>
  Poly<C> apply(const Poly<C>& arg) const {
    Poly<Scalar> self = to_poly(1, 0);
    Poly<C> lifted = self.template map_coefficients<C>(field_, [](const Scalar& s) { return C(s); });
    std::vector<Poly<C>> args{arg};
    return lifted.compose(args);
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

}  // namespace paut
