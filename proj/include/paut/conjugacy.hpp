#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paut/henon.hpp"
#include "paut/plane_aut.hpp"
#include "paut/upoly.hpp"

namespace paut {

// R(x+1) - R(x)
UPoly delta_map(const UPoly& r);
// F(x) + F(x+1) + ... + F(x+p-1); throws DomainError in characteristic 0.
UPoly n_map(const UPoly& f);
// Every exponent is congruent to p-1 modulo p.
bool in_v(const UPoly& f);
// x^(p-1) * P(x^p)
UPoly v_embed(const UPoly& p_tilde, std::uint64_t p);

struct CharPDecomposition {
  UPoly input;
  UPoly v;
  UPoly r;
  // P with v = x^(p-1) P(x^p).
  UPoly v_reduced;
};

// F = v + delta(r) with v in V. Throws DomainError in characteristic 0.
CharPDecomposition decompose_v_delta(const UPoly& f);

enum class Family { I, II, III, IV };
std::string family_name(Family f);

struct NormalForm {
  Family family;
  // I: a; III: zeta. One otherwise.
  Scalar a;
  // III: the order of zeta. Zero otherwise.
  int m = 0;
  // II: P(x2); III: P with the x1-part x2^(m-1) P(x2^m); IV: P with x2^(p-1) P(x2^p) (zero in characteristic 0).
  UPoly P;

  JonquieresFactor as_factor() const;
  Endo representative() const;
  std::string describe() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

struct NormalFormResult {
  NormalForm form;
  // form.representative() = conjugator∘f∘conjugator^-1
  PlaneAut conjugator;
};

// Normal form of a de Jonquières element, with k such that representative = k∘j∘k^-1.
std::pair<NormalForm, JonquieresFactor> normal_form_sj(const JonquieresFactor& j);
// Throws DomainError unless f is special and algebraic.
NormalFormResult normal_form(const PlaneAut& f);

enum class Verdict { yes, no, unknown };
std::string verdict_name(Verdict v);

struct Check {
  std::string name;
  bool passed;
};

struct ConjugacyResult {
  Verdict verdict = Verdict::unknown;
  // When yes: g = conjugator∘f∘conjugator^-1.
  std::optional<PlaneAut> conjugator;
  std::optional<NormalForm> form_f, form_g;
  std::optional<HenonInvariants> invariants_f, invariants_g;
  bool needs_extension = false;
  std::string reason;
  std::vector<Check> checks;
};

// Both maps special and algebraic.
ConjugacyResult are_conjugate_algebraic(const PlaneAut& f, const PlaneAut& g);
// Any special automorphisms; Hénon pairs get invariants and rotation certificates only.
ConjugacyResult are_conjugate(const PlaneAut& f, const PlaneAut& g);

struct CertificateReport {
  bool valid = false;
  Degree deg_h, deg_g;
  bool regular_bound = false;
  bool diagonal_bound = false;
  // h∘f^l with the smallest degree, searched when f is not algebraic.
  std::optional<long> minimizing_power;
  Degree deg_h_min;
  bool regular_bound_min = false;
};

// h∘f^l of least degree, searching an expanding window of exponents l.
std::pair<PlaneAut, long> minimize_conjugator(const PlaneAut& f, const PlaneAut& h);
CertificateReport verify_conjugacy_certificate(const PlaneAut& f, const PlaneAut& g, const PlaneAut& h);

}  // namespace paut
