#include "paut/henon.hpp"

#include <algorithm>
#include <stdexcept>

namespace paut {

namespace {

// S in SL2 with S∘x∘S^-1 in SJ for an affine x outside SJ (c != 0).
AffineFactor triangularizer(const AffineFactor& x) {
  Field k = x.field();
  Scalar tr = x.a + x.d;
  std::vector<Scalar> eig;
  if (k.is_rationals()) {
    Scalar disc = tr * tr - Scalar(k, 4L);
    for (const auto& s : disc.roots_of_power(2)) eig.push_back((tr + s) / Scalar(k, 2L));
  } else {
    for (const auto& l : field_elements(k)) {
      if (!l.is_zero() && (l * l - tr * l + Scalar::one(k)).is_zero()) eig.push_back(l);
    }
  }
  if (eig.empty()) throw FieldExtensionRequired("eigenvalues of the affine part lie outside " + k.descriptor());
  Scalar v1 = eig.front() - x.d, v2 = x.c;
  // Columns of S^-1: an eigenvector and a complement with determinant 1.
  AffineFactor s_inv = v1.is_zero() ? AffineFactor::linear(Scalar::zero(k), -v2.inverse(), v2, Scalar::zero(k))
                                    : AffineFactor::linear(v1, Scalar::zero(k), v2, v1.inverse());
  return s_inv.inverse();
}

}  // namespace

NormalizedAut henon_normalize(const PlaneAut& f) {
  if (!f.word()) throw DomainError("normalization needs a special automorphism (Jacobian 1)");
  Field k = f.field();
  AmalgamWord w = *f.word();
  std::vector<Factor> conj;  // conjugator factors, leftmost applied last
  auto conjugate_by = [&](Factor x) {
    AmalgamWord single(k, {x});
    w = reduce_word(single.then(w).then(single.inverse()));
    conj.insert(conj.begin(), x);
  };
  for (;;) {
    auto fs = w.factors();
    if (fs.size() == 1) {
      if (is_affine(fs[0]) && !in_intersection(fs[0])) {
        conjugate_by(triangularizer(std::get<AffineFactor>(fs[0])));
        continue;
      }
      break;
    }
    Factor first = fs.front();
    Factor last = fs.back();
    if (is_affine(first) && !is_affine(last)) break;
    conjugate_by(last);
  }
  PlaneAut h = PlaneAut::from_word(AmalgamWord(k, conj));
  PlaneAut check = conjugate(h, f);
  if (!(check.forward() == w.recompose())) throw std::logic_error("normalization fails the conjugation identity");
  auto fs = w.factors();
  if (fs.size() == 1) {
    JonquieresFactor j = is_affine(fs[0]) ? to_jonquieres(std::get<AffineFactor>(fs[0]))
                                          : std::get<JonquieresFactor>(fs[0]);
    return SJForm{j, h};
  }
  return HenonForm{w, h};
}

std::vector<int> min_rotation(std::vector<int> v) {
  std::vector<int> best = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(v.begin(), v.begin() + 1, v.end());
    best = std::min(best, v);
  }
  return best;
}

HenonInvariants henon_invariants(const HenonForm& h) {
  std::vector<int> d = h.core.jonquieres_degrees();
  std::reverse(d.begin(), d.end());
  return {static_cast<int>(d.size()), min_rotation(d)};
}

std::string HenonInvariants::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) out += (i ? "," : "") + std::to_string(degrees[i]);
  return out + ")";
}

}  // namespace paut
