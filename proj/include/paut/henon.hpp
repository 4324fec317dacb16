#pragma once

#include <string>
#include <variant>
#include <vector>

#include "paut/plane_aut.hpp"

namespace paut {

// element = conjugator∘f∘conjugator^-1 lies in SJ.
struct SJForm {
  JonquieresFactor element;
  PlaneAut conjugator;
};

// core = a_m j_m ... a_1 j_1 (reduced, starts affine, ends de Jonquières) and
// core.recompose() = conjugator∘f∘conjugator^-1.
struct HenonForm {
  AmalgamWord core;
  PlaneAut conjugator;
};

using NormalizedAut = std::variant<SJForm, HenonForm>;

// Cyclic reduction of the word of a special automorphism.
// Throws FieldExtensionRequired when a single affine factor has irrational eigenvalues.
NormalizedAut henon_normalize(const PlaneAut& f);

struct HenonInvariants {
  int m;
  // (deg j_1, ..., deg j_m), rotated to the lexicographically smallest rotation.
  std::vector<int> degrees;
  friend bool operator==(const HenonInvariants&, const HenonInvariants&) = default;
  std::string to_string() const;
};

HenonInvariants henon_invariants(const HenonForm& h);
std::vector<int> min_rotation(std::vector<int> v);

}  // namespace paut
