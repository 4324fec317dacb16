#include "paut/poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "paut/poly_kernels.hpp"

namespace paut {

namespace {

template <class T>
void sort_terms(std::vector<T>& terms) {
  std::sort(terms.begin(), terms.end(), [](const T& a, const T& b) { return grlex(a.first, b.first) > 0; });
}

}  // namespace

template <class C>
Poly<C>::Poly(Field f, int nvars) : field_(f), nvars_(nvars) {
  if (nvars < 1 || nvars > kMaxVars)
    throw DomainError("number of variables must be between 1 and " + std::to_string(kMaxVars));
}

template <class C>
Poly<C> Poly<C>::constant(Field f, int nvars, const C& c) {
  Poly r(f, nvars);
  if (c.field() != f) throw DomainError("ring mismatch in constant");
  if (!c.is_zero()) r.terms_.emplace_back(Monomial{}, c);
  return r;
}

template <class C>
Poly<C> Poly<C>::variable(Field f, int nvars, int index) {
  if (index < 0 || index >= nvars) throw DomainError("variable index out of range");
  return monomial(f, nvars, Monomial::variable(index), one_of<C>(f));
}

template <class C>
Poly<C> Poly<C>::monomial(Field f, int nvars, const Monomial& m, const C& c) {
  Poly r(f, nvars);
  if (!c.is_zero()) r.terms_.emplace_back(m, c);
  return r;
}

template <class C>
Poly<C> Poly<C>::from_terms(Field f, int nvars, std::vector<Term> terms) {
  Poly r(f, nvars);
  sort_terms(terms);
  for (auto& t : terms) {
    if (t.second.field() != f) throw DomainError("ring mismatch in polynomial terms");
    for (int i = nvars; i < kMaxVars; ++i) {
      if (t.first[i] != 0) throw DomainError("exponent outside the declared variables");
    }
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second += t.second;
      continue;
    }
    if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
    r.terms_.push_back(std::move(t));
  }
  if (!r.terms_.empty() && r.terms_.back().second.is_zero()) r.terms_.pop_back();
  return r;
}

template <class C>
void Poly<C>::check_compatible(const Poly& o, const char* op) const {
  if (field_ != o.field_ || nvars_ != o.nvars_)
    throw DomainError(std::string("ring mismatch in polynomial ") + op);
}

template <class C>
Degree Poly<C>::degree() const {
  return terms_.empty() ? Degree::neg_inf() : Degree(terms_.front().first.total_degree());
}

template <class C>
int Poly<C>::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[var]);
  return d;
}

template <class C>
Poly<C> Poly<C>::homogeneous_part(int d) const {
  if (d < 0) throw DomainError("homogeneous part of negative degree");
  Poly r(field_, nvars_);
  for (const auto& t : terms_) {
    if (t.first.total_degree() == d) r.terms_.push_back(t);
  }
  return r;
}

template <class C>
Poly<C> Poly<C>::leading_form() const {
  if (terms_.empty()) return *this;
  return homogeneous_part(terms_.front().first.total_degree());
}

template <class C>
C Poly<C>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grlex(t.first, x) > 0; });
  if (it != terms_.end() && it->first == m) return it->second;
  return zero_of<C>(field_);
}

template <class C>
Poly<C> Poly<C>::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

template <class C>
Poly<C>& Poly<C>::operator+=(const Poly& o) {
  check_compatible(o, "addition");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      out.push_back(std::move(*a++));
      continue;
    }
    if (a == terms_.end()) {
      out.push_back(*b++);
      continue;
    }
    auto c = grlex(a->first, b->first);
    if (c > 0) {
      out.push_back(std::move(*a++));
    } else if (c < 0) {
      out.push_back(*b++);
    } else {
      a->second += b->second;
      if (!a->second.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

template <class C>
Poly<C>& Poly<C>::operator-=(const Poly& o) {
  return *this += -o;
}

template <class C>
Poly<C>& Poly<C>::operator*=(const Poly& o) {
  check_compatible(o, "multiplication");
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (o.terms_.size() == 1) {
    // A monomial factor preserves the term order.
    for (auto& t : terms_) {
      t.first = t.first * o.terms_[0].first;
      t.second *= o.terms_[0].second;
    }
    std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
    return *this;
  }
  terms_ = kernels::multiply<C>(terms_, o.terms_);
  return *this;
}

template <class C>
Poly<C> Poly<C>::scaled(const C& c) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  std::erase_if(r.terms_, [](const Term& t) { return t.second.is_zero(); });
  return r;
}

template <class C>
Poly<C> Poly<C>::pow(unsigned e) const {
  auto p = field_.characteristic();
  if (p != 0 && e >= p && e % p == 0) return pow(static_cast<unsigned>(e / p)).frobenius();
  Poly result = constant(field_, nvars_, one_of<C>(field_));
  Poly base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

template <class C>
Poly<C> Poly<C>::frobenius() const {
  auto p = static_cast<int>(field_.characteristic());
  if (p == 0) throw DomainError("Frobenius needs positive characteristic");
  Poly r = *this;
  for (auto& t : r.terms_) {
    t.first = t.first.scaled(p);
    t.second = coeff_frobenius(t.second);
  }
  return r;
}

template <class C>
Poly<C> Poly<C>::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    out.emplace_back(d, c * C(Scalar(field_, static_cast<long>(e))));
  }
  return from_terms(field_, nvars_, std::move(out));
}

namespace {

// Memoized powers of one substituted argument. In characteristic p, g^(pk) is the Frobenius
// image of g^k, so only the powers actually requested and their p-power roots are built.
template <class C>
class PowerCache {
 public:
  explicit PowerCache(const Poly<C>& g) : g_(g) {}
  const Poly<C>& get(int e) {
    if (auto it = pw_.find(e); it != pw_.end()) return it->second;
    auto p = static_cast<int>(g_.field().characteristic());
    Poly<C> r = e == 0                   ? Poly<C>::constant(g_.field(), g_.nvars(), one_of<C>(g_.field()))
                : e == 1                 ? g_
                : p != 0 && e % p == 0   ? get(e / p).frobenius()
                                         : get(e - 1) * g_;
    return pw_.emplace(e, std::move(r)).first->second;
  }

 private:
  Poly<C> g_;
  std::map<int, Poly<C>> pw_;
};

// Horner evaluation in variable v, recursing on the remaining variables.
template <class C>
Poly<C> compose_rec(std::vector<typename Poly<C>::Term> terms, int v, int nvars,
                    std::vector<PowerCache<C>>& cache, Field f, int out_nvars) {
  if (v == nvars) {
    C s = zero_of<C>(f);
    for (const auto& t : terms) s += t.second;
    return Poly<C>::constant(f, out_nvars, s);
  }
  std::map<int, std::vector<typename Poly<C>::Term>, std::greater<>> groups;
  for (auto& t : terms) groups[t.first[v]].push_back(std::move(t));
  Poly<C> acc(f, out_nvars);
  int prev = -1;
  for (auto& [k, group] : groups) {
    if (prev >= 0) acc *= cache[static_cast<std::size_t>(v)].get(prev - k);
    acc += compose_rec<C>(std::move(group), v + 1, nvars, cache, f, out_nvars);
    prev = k;
  }
  if (prev > 0) acc *= cache[static_cast<std::size_t>(v)].get(prev);
  return acc;
}

}  // namespace

template <class C>
Poly<C> Poly<C>::compose(std::span<const Poly> args) const {
  if (static_cast<int>(args.size()) != nvars_)
    throw DomainError("composition arity mismatch: expected " + std::to_string(nvars_) + " arguments, got " +
                      std::to_string(args.size()));
  int out_n = args.empty() ? nvars_ : args[0].nvars();
  for (const auto& a : args) {
    if (a.field_ != field_ || a.nvars_ != out_n) throw DomainError("ring mismatch in composition");
  }
  std::vector<PowerCache<C>> cache;
  cache.reserve(args.size());
  for (const auto& a : args) cache.emplace_back(a);
  return compose_rec<C>(terms_, 0, nvars_, cache, field_, out_n);
}

template <class C>
C Poly<C>::evaluate(std::span<const C> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw DomainError("evaluation arity mismatch");
  std::vector<std::vector<C>> pw(point.size());
  C acc = zero_of<C>(field_);
  for (const auto& [m, c] : terms_) {
    C term = c;
    for (int i = 0; i < nvars_; ++i) {
      auto& cache = pw[static_cast<std::size_t>(i)];
      int e = m[i];
      if (cache.empty()) cache.push_back(one_of<C>(field_));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[static_cast<std::size_t>(i)]);
      term *= cache[static_cast<std::size_t>(e)];
    }
    acc += term;
  }
  return acc;
}

template <class C>
Poly<C> Poly<C>::with_nvars(int n) const {
  Poly r(field_, n);
  for (const auto& t : terms_) {
    for (int i = n; i < nvars_; ++i) {
      if (t.first[i] != 0) throw DomainError("polynomial uses a variable beyond x" + std::to_string(n));
    }
  }
  r.terms_ = terms_;
  return r;
}

template class Poly<Scalar>;
template class Poly<Laurent>;

}  // namespace paut
