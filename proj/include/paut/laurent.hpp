#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paut/ext_int.hpp"
#include "paut/field.hpp"

namespace paut {

// Laurent polynomial in t over a base field; terms sorted by exponent, no zero coefficients.
class Laurent {
 public:
  using Term = std::pair<int, Scalar>;

  Laurent() = default;
  explicit Laurent(Field f) : field_(f) {}
  explicit Laurent(const Scalar& c);
  static Laurent monomial(const Scalar& c, int exponent);
  static Laurent zero(Field f) { return Laurent(f); }
  static Laurent one(Field f) { return Laurent(Scalar::one(f)); }

  Field field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }
  bool is_unit() const { return terms_.size() == 1; }
  std::span<const Term> terms() const { return terms_; }

  Valuation valuation() const;
  Degree max_exponent() const;
  Scalar coefficient(int exponent) const;
  // Throws PoleError when the valuation is negative.
  Scalar value_at_zero() const;
  Scalar evaluate(const Scalar& t) const;
  // t -> t^m, m >= 1.
  Laurent substitute_power(int m) const;
  // Multiply by t^k.
  Laurent shifted(int k) const;
  // Exact quotient, or nullopt if the division leaves a remainder.
  std::optional<Laurent> try_divide(const Laurent& d) const;
  // Apply x -> x^p to coefficients and t (the Frobenius in characteristic p).
  Laurent frobenius() const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Term> terms_;
};

}  // namespace paut
