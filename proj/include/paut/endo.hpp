#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paut/format.hpp"
#include "paut/poly.hpp"

namespace paut {

// A self-map of affine n-space given by n polynomials in x1..xn.
template <class C>
class PolyMap {
 public:
  explicit PolyMap(std::vector<Poly<C>> components);
  static PolyMap identity(Field f, int n);

  int nvars() const { return static_cast<int>(comps_.size()); }
  Field field() const { return comps_.front().field(); }
  const Poly<C>& operator[](std::size_t i) const { return comps_[i]; }
  std::span<const Poly<C>> components() const { return comps_; }
  Degree degree() const { return degree_; }
  bool is_identity() const { return *this == identity(field(), nvars()); }

  friend bool operator==(const PolyMap& a, const PolyMap& b) { return a.comps_ == b.comps_; }

 private:
  std::vector<Poly<C>> comps_;
  Degree degree_;
};

extern template class PolyMap<Scalar>;
extern template class PolyMap<Laurent>;

using Endo = PolyMap<Scalar>;
using LaurentMap = PolyMap<Laurent>;

// f∘g: apply g first.
template <class C>
PolyMap<C> compose(const PolyMap<C>& f, const PolyMap<C>& g);
template <class C>
Poly<C> jacobian(const PolyMap<C>& f);
// Degree-d parts of the components, d = deg f.
template <class C>
PolyMap<C> highest_part(const PolyMap<C>& f);
template <class C>
std::string format_map(const PolyMap<C>& f);

LaurentMap lift_t(const Endo& f);
Endo drop_t(const LaurentMap& f);
Endo parse_endo(std::string_view src, Field f);

// Exact deg(f∘g), reading it off the composed highest parts when they do not cancel.
Degree composite_degree(const Endo& f, const Endo& g);
// True when deg(f^m) = deg(f)^m is certified by a nonzero value of the m-fold iterated
// highest part at a sample point. False means the test was inconclusive or the degree drops.
bool top_iterate_certificate(const Endo& f, int m);
// [deg f, deg f^2, ..., deg f^m]; throws DomainError if the symbolic budget is exceeded.
std::vector<Degree> degree_sequence(const Endo& f, int m);

// A point [0 : y1 : ... : yn] on the hyperplane at infinity, first nonzero coordinate 1.
class InfinityPoint {
 public:
  // Throws DomainError if all coordinates vanish.
  explicit InfinityPoint(std::vector<Scalar> coords);
  std::span<const Scalar> coords() const { return y_; }
  std::string to_string() const;
  friend bool operator==(const InfinityPoint&, const InfinityPoint&) = default;

 private:
  std::vector<Scalar> y_;
};

// Common zero on the line at infinity of two binary forms of equal degree (not both zero).
// Throws FieldExtensionRequired when the root is irrational over the base field and
// DomainError when the common zero locus is not a single point.
InfinityPoint common_zero_at_infinity(const ScalarPoly& a1, const ScalarPoly& a2);

}  // namespace paut
