#include <doctest.h>

#include "gen.hpp"

using namespace paut;
using namespace paut::testing;

namespace {

UPoly up(Field k, std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.emplace_back(k, v);
  return UPoly(k, s);
}

NormalForm form_of(const char* src, Field k = Field::rationals()) { return normal_form(aut(src, k)).form; }

}  // namespace

TEST_CASE("delta and N") {
  Field F3 = Field::prime(3);
  UPoly x = UPoly::x(F3);
  CHECK(delta_map(x.pow(3)) == x.pow(2).scaled(Scalar(F3, 3L)) + x.scaled(Scalar(F3, 3L)) + UPoly::constant(Scalar::one(F3)));
  CHECK(n_map(x.pow(2)) == UPoly::constant(Scalar(F3, 2L)));
  CHECK(in_v(x.pow(2) + x.pow(5)));
  CHECK(!in_v(x));
  CHECK(v_embed(up(F3, {1, 1}), 3) == x.pow(2) + x.pow(5));
  CHECK_THROWS_AS(n_map(UPoly::x(Field::rationals())), DomainError);
  CHECK_THROWS_AS(decompose_v_delta(UPoly::x(Field::rationals())), DomainError);
}

TEST_CASE("property: V + delta decomposition") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    Field k = Field::prime(p);
    Gen g(k, p);
    for (int i = 0; i < 40; ++i) {
      UPoly f = g.upoly(g.uniform(0, 25));
      auto d = decompose_v_delta(f);
      CHECK(d.v + d.r.shift(Scalar::one(k)) - d.r == f);
      CHECK(in_v(d.v));
      CHECK(v_embed(d.v_reduced, p) == d.v);
      CHECK(n_map(delta_map(d.r)).is_zero());
    }
  }
}

TEST_CASE("normal forms of the worked examples") {
  Field Q, F2 = Field::prime(2);
  NormalForm a = form_of("(2*x1+x2^3, x2/2)");
  CHECK(a.family == Family::I);
  CHECK(a.a == Scalar(Q, 2L));
  NormalForm b = form_of("(-x1+x2^3, -x2)");
  CHECK(b.family == Family::III);
  CHECK(b.m == 2);
  CHECK(b.a == Scalar(Q, -1L));
  CHECK(b.P == UPoly::x(Q));
  // x2 + x2^2 = delta(x2^3 + x2) in characteristic 2, so the V-part vanishes.
  NormalForm c = form_of("(x1+x2+x2^2, x2+1)", F2);
  CHECK(c.family == Family::IV);
  CHECK(c.P.is_zero());
  NormalForm d = form_of("(x1+x2^2, x2)");
  CHECK(d.family == Family::II);
  CHECK(d.P == up(Q, {0, 0, 1}));
  CHECK_THROWS_AS(normal_form(aut("(-x2, x1+x2^2)")), DomainError);
  CHECK_THROWS_AS(normal_form(aut("(x2, -x1)")), FieldExtensionRequired);
  NormalForm e = form_of("(x2, -x1)", Field::prime(5));
  CHECK(e.family == Family::I);
}

TEST_CASE("property: normal form conjugator is verified") {
  for (Field k : {Field::rationals(), Field::prime(7), Field::prime(3)}) {
    Gen g(k, 71);
    for (int i = 0; i < 25; ++i) {
      JonquieresFactor j{g.nonzero(), g.upoly(g.uniform(0, 4)), g.scalar()};
      PlaneAut h = g.disguise(3);
      PlaneAut f = conjugate(h, PlaneAut::from_word(AmalgamWord(k, {j})));
      NormalFormResult nf = normal_form(f);
      CHECK(conjugate(nf.conjugator, f).forward() == nf.form.representative());
      // The disguise may move the form within its class, never out of it.
      NormalForm direct = normal_form_sj(j).first;
      CHECK(direct.family == nf.form.family);
      PlaneAut rep = PlaneAut::create(direct.representative());
      CHECK(are_conjugate(rep, PlaneAut::create(nf.form.representative())).verdict == Verdict::yes);
    }
  }
}

TEST_CASE("conjugacy decisions on small cases") {
  Field Q, F3 = Field::prime(3);
  auto decide = [](const char* a, const char* b, Field k) { return are_conjugate(aut(a, k), aut(b, k)); };
  CHECK(decide("(2*x1, x2/2)", "(x1/2, 2*x2)", Q).verdict == Verdict::yes);
  CHECK(decide("(2*x1, x2/2)", "(3*x1, x2/3)", Q).verdict == Verdict::no);
  CHECK(decide("(x1+1, x2)", "(x1, x2+1)", Q).verdict == Verdict::yes);
  CHECK(decide("(x1+1, x2)", "(x1, x2+1)", F3).verdict == Verdict::yes);
  CHECK(decide("(x1+x2^2, x2+1)", "(x1, x2+1)", F3).verdict == Verdict::no);
  auto r = decide("(x1+x2^2, x2)", "(x1+2*x2^2, x2)", Q);
  CHECK(r.verdict == Verdict::unknown);
  CHECK(r.needs_extension);
  CHECK(decide("(x1+x2^2, x2)", "(x1+8*x2^2, x2)", Q).verdict == Verdict::yes);
  CHECK(decide("(-x2, x1+x2^2)", "(-x2, x1+x2^3)", Q).verdict == Verdict::no);
  CHECK(decide("(-x2, x1+x2^2)", "(x1, x2+x1^2)", Q).verdict == Verdict::no);
  CHECK_THROWS_AS(decide("(-x2, x1+x2^2)", "(x1+x2^2, -x2)", Q), DomainError);
}

TEST_CASE("Henon conjugates are recognized with certificates") {
  Gen g(Field::rationals(), 5);
  for (int i = 0; i < 10; ++i) {
    PlaneAut f = g.aut(g.henon_word(g.uniform(1, 2), 3));
    PlaneAut h = g.disguise(3);
    PlaneAut gg = conjugate(h, f);
    auto r = are_conjugate(f, gg);
    CHECK(r.verdict == Verdict::yes);
    REQUIRE(r.conjugator);
    CHECK(conjugate(*r.conjugator, f) == gg);
    CHECK(verify_conjugacy_certificate(f, gg, *r.conjugator).valid);
  }
}

TEST_CASE("conjugator minimization along powers of f") {
  PlaneAut f = aut("(-x2, x1+x2^2)"), j = aut("(x1+x2^3, x2)");
  PlaneAut h = compose(j, power(f, 2));
  auto [hm, l] = minimize_conjugator(f, h);
  CHECK(l == -2);
  CHECK(hm == j);
  auto rep = verify_conjugacy_certificate(f, conjugate(h, f), h);
  CHECK(rep.valid);
  CHECK(!rep.regular_bound);
  CHECK(rep.regular_bound_min);
  CHECK(!verify_conjugacy_certificate(f, f, j).valid);
}
