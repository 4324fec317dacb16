#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paut/amalgam.hpp"
#include "paut/endo.hpp"

namespace paut {

// Inverse of a plane automorphism by elementary reduction of the leading forms.
// Works over Laurent coefficients when the needed quotients are exact; throws NotInvertible otherwise.
template <class C>
PolyMap<C> invert_plane_map(const PolyMap<C>& f);

// An automorphism of the plane with its inverse, Jacobian and (when special) reduced word.
class PlaneAut {
 public:
  // Throws NotInvertible unless f is an automorphism of the plane.
  static PlaneAut create(const Endo& f);
  static PlaneAut from_word(const AmalgamWord& w);
  static PlaneAut identity(Field k);

  const Endo& forward() const { return forward_; }
  const Endo& inverse_map() const { return inverse_; }
  const Scalar& jacobian() const { return jac_; }
  bool is_special() const { return jac_.is_one(); }
  Field field() const { return forward_.field(); }
  Degree degree() const { return forward_.degree(); }
  const std::optional<AmalgamWord>& word() const { return word_; }
  PlaneAut inverse() const;

  friend bool operator==(const PlaneAut& a, const PlaneAut& b) { return a.forward_ == b.forward_; }

 private:
  PlaneAut(Endo fwd, Endo inv, Scalar jac, std::optional<AmalgamWord> w)
      : forward_(std::move(fwd)), inverse_(std::move(inv)), jac_(std::move(jac)), word_(std::move(w)) {}
  Endo forward_, inverse_;
  Scalar jac_;
  std::optional<AmalgamWord> word_;

  friend PlaneAut compose(const PlaneAut& f, const PlaneAut& g);
};

// f∘g
PlaneAut compose(const PlaneAut& f, const PlaneAut& g);
PlaneAut power(const PlaneAut& f, long k);
// h∘f∘h^-1
PlaneAut conjugate(const PlaneAut& h, const PlaneAut& f);

Degree composite_degree(const PlaneAut& f, const PlaneAut& g);
std::vector<Degree> degree_sequence(const PlaneAut& f, int m);

InfinityPoint indeterminacy_point(const PlaneAut& f);
InfinityPoint image_point_at_infinity(const PlaneAut& f);

struct MultiplicativityReport {
  bool multiplicative;
  Degree degree_of_composite;
  std::optional<InfinityPoint> x_f;
  std::optional<InfinityPoint> i_g;
  // Set when both points were computed: true iff X_f differs from I_g.
  std::optional<bool> point_test;
  std::string point_error;
};
// Whether deg(g∘f) = deg g * deg f, with the witness pair (X_f, I_g).
MultiplicativityReport degree_multiplicativity_test(const PlaneAut& f, const PlaneAut& g);
bool is_dynamically_regular(const PlaneAut& f);
bool is_algebraic(const PlaneAut& f);

}  // namespace paut
