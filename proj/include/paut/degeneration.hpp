#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paut/conjugacy.hpp"

namespace paut {

// A one-parameter family over K[t, t^-1].
using TFamily = LaurentMap;

Valuation family_valuation(const TFamily& a);
// The family at t = 0; throws PoleError carrying the valuation when it is negative.
Endo family_value_at_zero(const TFamily& a);
// The family at t = c for c != 0.
Endo specialize(const TFamily& a, const Scalar& c);
// t -> t^m
TFamily substitute_t_power(const TFamily& a, int m);
TFamily compose_families(const TFamily& f, const TFamily& g);

// Inverse over K[t, t^-1], computed in two variables by elementary reduction and checked by composition.
// Throws NotInvertible when no inverse exists over the ring.
TFamily family_inverse(const TFamily& a);
// Checks a caller-supplied candidate on both sides; throws NotInvertible if it fails.
TFamily family_inverse(const TFamily& a, const TFamily& candidate);

struct XAlphaSet {
  // alpha = t^-m * (reduced + t * ...)
  int m;
  Endo reduced;
  std::vector<std::vector<Scalar>> sample_points;
  std::vector<InfinityPoint> images;
};

// Throws DomainError when the family has no pole.
XAlphaSet x_alpha(const TFamily& a, std::size_t samples = 4);

struct PoleReport {
  Valuation nu_alpha;
  std::optional<InfinityPoint> i_f;
  std::optional<XAlphaSet> x;
  // Per sampled image: whether it differs from I_f.
  std::vector<bool> avoids;
  // Some sampled point of X_alpha lies outside I_f.
  bool hypothesis = false;
  Valuation nu_conjugate;          // alpha^-1 f alpha
  Valuation nu_inverse_conjugate;  // alpha^-1 f^-1 alpha
  Valuation nu_reverse_inverse;    // alpha f^-1 alpha^-1
  // hypothesis implies a pole of alpha^-1 f alpha
  bool implication_holds = true;
  // alpha^-1 f alpha or alpha f^-1 alpha^-1 has a pole
  bool dichotomy = false;
  std::string note;
};

// Throws DomainError unless deg f >= 2.
PoleReport pole_propagation_check(const PlaneAut& f, const TFamily& alpha);

enum class Variant { F1, F2 };
std::string variant_name(Variant v);
Variant parse_variant(std::string_view s);

struct DegenerationWitness {
  Endo source;
  // family = conjugator^-1 ∘ source ∘ conjugator
  TFamily conjugator;
  TFamily family;
  Endo limit;
  std::optional<int> d;
  std::optional<Scalar> mu;
  std::optional<long> q;
  std::optional<Scalar> lambda;
  std::optional<int> m;
  // The extracted P of the translation family, in x1, x2 and t.
  std::optional<LaurentPoly> P;
  std::vector<Check> checks;
};

// (x1 + P(x2), x2) degenerates to the identity.
DegenerationWitness degenerate_family_ii(const UPoly& P);
// (zeta x1 + x2^(m-1) P(x2^m), zeta^-1 x2) degenerates to (zeta x1, zeta^-1 x2).
DegenerationWitness degenerate_family_iii(const Scalar& zeta, int m, const UPoly& P);
// (x1 + Q(x2), x2 + 1) in characteristic p: F1 tends to (x1, x2 + 1), F2 to the identity.
DegenerationWitness degenerate_family_iv(const UPoly& Q, Variant variant);
// Through the normal form of f; the conjugator is rewritten to act on f itself.
// Throws DomainError for family I, whose class admits no such degeneration here.
DegenerationWitness degenerate(const PlaneAut& f, Variant variant);

// F(c) = conjugator(c)^-1 ∘ f ∘ conjugator(c) at the given nonzero parameters.
bool check_specializations(const DegenerationWitness& w, std::span<const Scalar> params);

}  // namespace paut
