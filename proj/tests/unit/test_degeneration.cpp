#include <doctest.h>

#include "gen.hpp"

using namespace paut;
using namespace paut::testing;

TEST_CASE("valuations and values at the origin") {
  Field Q;
  CHECK(family_valuation(family("(x1/t, t*x2)")) == Valuation(-1));
  CHECK_THROWS_AS(family_value_at_zero(family("(x1/t, t*x2)")), PoleError);
  try {
    family_value_at_zero(family("(x1/t^3, t*x2)"));
  } catch (const PoleError& e) {
    CHECK(e.valuation() == -3);
  }
  CHECK(family_valuation(family("(x1 + t*x2^2, x2)")) == Valuation(0));
  CHECK(family_value_at_zero(family("(x1 + t*x2^2, x2)")) == endo("(x1, x2)"));
  CHECK(family_value_at_zero(family("(x1 + t*x2^5 - t^2*x2, x2)")).is_identity());
  CHECK(specialize(family("(x1/t, t*x2)"), Scalar(Q, 2L)) == endo("(x1/2, 2*x2)"));
}

TEST_CASE("family inverses") {
  CHECK(family_inverse(family("(x1 + t*x2^2, x2)")) == family("(x1 - t*x2^2, x2)"));
  CHECK(family_inverse(family("(t*x1, x2/t)")) == family("(x1/t, t*x2)"));
  Field F2 = Field::prime(2);
  TFamily a = family("(x1/t, t*x2 + x1^2 + 1/t)", F2);
  TFamily ai = family_inverse(a);
  // Solving the triangular system by hand: x1 = t*y1, x2 = (y2 - t^2*y1^2 - 1/t)/t.
  CHECK(ai == family("(t*x1, x2/t + t*x1^2 + 1/t^2)", F2));
  CHECK_THROWS_AS(family_inverse(family("(x1, x2)"), family("(x1, 2*x2)")), NotInvertible);
  CHECK(family_inverse(family("(t*x1, x2)")) == family("(x1/t, x2)"));
  CHECK_THROWS_AS(family_inverse(family("(x1^2, x2)")), NotInvertible);
}

TEST_CASE("property: pole-free special families have pole-free inverses") {
  Field Q;
  Gen g(Q, 33);
  for (int i = 0; i < 30; ++i) {
    // A triangular factor with coefficients in K[t] between two affine factors.
    auto t = TFamily(parse_tuple("(x1 + t*x2^2 - t^2*x2^3, x2 + t)", Q));
    TFamily a = compose(lift_t(g.affine().to_map()), compose(t, lift_t(g.affine().to_map())));
    TFamily ai = family_inverse(a);
    CHECK(family_valuation(ai).value() >= 0);
    CHECK(compose(family_value_at_zero(a), family_value_at_zero(ai)).is_identity());
  }
}

TEST_CASE("X_alpha samples") {
  Field F2 = Field::prime(2), Q;
  XAlphaSet x = x_alpha(family("(x1/t, t*x2 + x1^2 + 1/t)", F2));
  CHECK(x.m == 1);
  CHECK(x.reduced == endo("(x1, 1)", F2));
  for (const auto& p : x.images) CHECK(p.coords().back().is_one());
  XAlphaSet y = x_alpha(family("(x1/t, x2/t)"));
  CHECK(y.reduced.is_identity());
  CHECK(y.images.size() == 4);
  CHECK_THROWS_AS(x_alpha(family("(x1 + t*x2, x2)")), DomainError);
}

TEST_CASE("pole propagation on the Henon example") {
  PoleReport r = pole_propagation_check(aut("(-x2, x1+x2^2)"), family("(x1/t, x2/t)"));
  CHECK(r.hypothesis);
  CHECK(r.nu_conjugate.value() < 0);
  CHECK(r.implication_holds);
  CHECK(r.dichotomy);
  PoleReport s = pole_propagation_check(aut("(-x2, x1+x2^2)"), family("(x1 + t*x2, x2)"));
  CHECK(!s.hypothesis);
  CHECK(!s.note.empty());
  CHECK_THROWS_AS(pole_propagation_check(aut("(x2, -x1)"), family("(x1/t, x2/t)")), DomainError);
}

TEST_CASE("diagonal degenerations") {
  Field Q;
  UPoly P(Q, {Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)});
  DegenerationWitness w = degenerate_family_ii(P);
  // The special diagonal conjugator also rescales the argument of P: t*P(t*x2).
  CHECK(w.family == family("(x1 + t^3*x2^2, x2)"));
  CHECK(w.limit.is_identity());
  DegenerationWitness z = degenerate_family_iii(Scalar(Q, -1L), 2, UPoly::x(Q));
  CHECK(z.family == family("(-x1 + t^4*x2^3, -x2)"));
  CHECK(z.limit == endo("(-x1, -x2)"));
  DegenerationWitness c = degenerate_family_ii(UPoly(Q));
  CHECK(c.family == lift_t(endo("(x1, x2)")));
  CHECK_THROWS_AS(degenerate_family_iii(Scalar(Q, -1L), 3, P), DomainError);
}

TEST_CASE("translation family degenerations in characteristic p") {
  Field F2 = Field::prime(2), F3 = Field::prime(3);
  DegenerationWitness w = degenerate_family_iv(UPoly::x(F2), Variant::F1);
  CHECK(*w.d == 1);
  CHECK(*w.q == 2);
  CHECK(w.lambda->is_one());
  CHECK(*w.P == parse_polynomial("x1^2 + t*x2", F2, 2));
  CHECK(w.limit == endo("(x1, x2 + 1)", F2));
  DegenerationWitness v = degenerate_family_iv(UPoly::x(F2), Variant::F2);
  CHECK(v.limit.is_identity());
  CHECK(*v.m == 6);
  DegenerationWitness one = degenerate_family_iv(UPoly::constant(Scalar::one(F3)), Variant::F1);
  CHECK(*one.q == 3);
  CHECK(one.limit == endo("(x1, x2 + 1)", F3));
  DegenerationWitness zero = degenerate_family_iv(UPoly(F3), Variant::F2);
  CHECK(zero.family == family("(x1, x2 + t)", F3));
  CHECK_THROWS_AS(degenerate_family_iv(UPoly::x(Field::rationals()), Variant::F1), DomainError);
}

TEST_CASE("degeneration through the normal form of a disguised map") {
  Field F5 = Field::prime(5);
  Gen g(F5, 9);
  for (int i = 0; i < 5; ++i) {
    JonquieresFactor j{Scalar::one(F5), g.upoly(g.uniform(1, 3)), Scalar::one(F5)};
    PlaneAut f = conjugate(g.disguise(2), PlaneAut::from_word(AmalgamWord(F5, {j})));
    for (Variant v : {Variant::F1, Variant::F2}) {
      DegenerationWitness w = degenerate(f, v);
      CHECK(w.source == f.forward());
      for (const auto& c : w.checks) CHECK_MESSAGE(c.passed, c.name);
    }
  }
  CHECK_THROWS_AS(degenerate(aut("(2*x1, x2/2)"), Variant::F1), DomainError);
}
