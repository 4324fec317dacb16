#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "paut/endo.hpp"
#include "paut/upoly.hpp"

namespace paut {

// (a*x1 + b*x2 + e, c*x1 + d*x2 + f) with ad - bc = 1.
struct AffineFactor {
  Scalar a, b, c, d, e, f;

  static AffineFactor identity(Field k);
  // Throws DomainError unless m has degree at most 1 and determinant 1.
  static AffineFactor from_map(const Endo& m);
  static AffineFactor linear(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d);

  Field field() const { return a.field(); }
  Scalar determinant() const { return a * d - b * c; }
  bool in_sj() const { return c.is_zero(); }
  bool is_identity() const;
  Endo to_map() const;
  AffineFactor inverse() const;
  // this∘o
  AffineFactor compose(const AffineFactor& o) const;
  InfinityPoint act_at_infinity(const InfinityPoint& y) const;
  friend bool operator==(const AffineFactor&, const AffineFactor&) = default;
};

// (a*x1 + P(x2), x2/a + c).
struct JonquieresFactor {
  Scalar a;
  UPoly P;
  Scalar c;

  static JonquieresFactor identity(Field k);
  Field field() const { return a.field(); }
  bool in_saff() const { return P.degree() <= 1; }
  int degree() const { return P.degree() <= 1 ? 1 : static_cast<int>(P.degree().value()); }
  Endo to_map() const;
  JonquieresFactor inverse() const;
  JonquieresFactor compose(const JonquieresFactor& o) const;
  friend bool operator==(const JonquieresFactor&, const JonquieresFactor&) = default;
};

// Throws DomainError when the factor is not in SAff ∩ SJ.
AffineFactor to_affine(const JonquieresFactor& j);
JonquieresFactor to_jonquieres(const AffineFactor& a);

using Factor = std::variant<AffineFactor, JonquieresFactor>;

bool is_affine(const Factor& x);
bool in_intersection(const Factor& x);
Endo factor_map(const Factor& x);
Factor factor_inverse(const Factor& x);
// x∘g
Endo apply_factor(const Factor& x, const Endo& g);
std::string format_factor(const Factor& x);

// A product x_1∘x_2∘...∘x_k of affine and de Jonquières factors.
class AmalgamWord {
 public:
  AmalgamWord(Field k, std::vector<Factor> factors, bool reduced = false);
  static AmalgamWord identity(Field k);

  Field field() const { return field_; }
  std::span<const Factor> factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool is_reduced() const { return reduced_; }

  Endo recompose() const;
  AmalgamWord inverse() const;
  // Word for this∘other (not reduced).
  AmalgamWord then(const AmalgamWord& other) const;
  // Degrees of the de Jonquières factors, left to right.
  std::vector<int> jonquieres_degrees() const;
  // Product of the de Jonquières degrees; equals the map's degree for reduced words.
  long degree() const;

 private:
  Field field_;
  std::vector<Factor> factors_;
  bool reduced_;
};

AmalgamWord reduce_word(const AmalgamWord& w);
// Factorization of a special plane automorphism, reduced.
AmalgamWord jvdk_factor(const Endo& f);

}  // namespace paut
