#pragma once

#include <span>
#include <utility>
#include <vector>

#include "paut/coeff.hpp"
#include "paut/errors.hpp"
#include "paut/ext_int.hpp"
#include "paut/field.hpp"
#include "paut/laurent.hpp"
#include "paut/monomial.hpp"

namespace paut {

// Sparse polynomial in x1..xn over C (Scalar or Laurent). Terms are kept in
// descending graded-lex order with nonzero coefficients.
template <class C>
class Poly {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  Poly() : Poly(Field::rationals(), 1) {}
  Poly(Field f, int nvars);
  static Poly constant(Field f, int nvars, const C& c);
  static Poly constant(int nvars, const Scalar& c) { return constant(c.field(), nvars, C(c)); }
  static Poly variable(Field f, int nvars, int index);
  static Poly monomial(Field f, int nvars, const Monomial& m, const C& c);
  static Poly from_terms(Field f, int nvars, std::vector<Term> terms);

  Field field() const { return field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }

  Degree degree() const;
  int degree_in(int var) const;
  Poly homogeneous_part(int d) const;
  Poly leading_form() const;
  C coefficient(const Monomial& m) const;
  C constant_term() const { return coefficient(Monomial{}); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r = a;
    r *= b;
    return r;
  }
  Poly scaled(const C& c) const;
  Poly pow(unsigned e) const;
  // Raise exponents and coefficients to the p-th power; equals pow(p) in characteristic p.
  Poly frobenius() const;
  Poly derivative(int var) const;
  // f(args[0], ..., args[n-1]); all args share one field and one nvars.
  Poly compose(std::span<const Poly> args) const;
  C evaluate(std::span<const C> point) const;
  // Same polynomial viewed in a different number of variables.
  Poly with_nvars(int n) const;

  template <class D, class F>
  Poly<D> map_coefficients(Field target, F&& fn) const {
    std::vector<typename Poly<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, fn(c));
    return Poly<D>::from_terms(target, nvars_, std::move(out));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Poly& o, const char* op) const;
  Field field_;
  int nvars_;
  std::vector<Term> terms_;
};

extern template class Poly<Scalar>;
extern template class Poly<Laurent>;

using ScalarPoly = Poly<Scalar>;
using LaurentPoly = Poly<Laurent>;

}  // namespace paut
