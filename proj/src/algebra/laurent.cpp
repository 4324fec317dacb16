#include "paut/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "paut/errors.hpp"

namespace paut {

Laurent::Laurent(const Scalar& c) : field_(c.field()) {
  if (!c.is_zero()) terms_.emplace_back(0, c);
}

Laurent Laurent::monomial(const Scalar& c, int exponent) {
  Laurent r(c.field());
  if (!c.is_zero()) r.terms_.emplace_back(exponent, c);
  return r;
}

Valuation Laurent::valuation() const {
  return terms_.empty() ? Valuation::neg_inf() : Valuation(terms_.front().first);
}

Degree Laurent::max_exponent() const {
  return terms_.empty() ? Degree::neg_inf() : Degree(terms_.back().first);
}

Scalar Laurent::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Scalar::zero(field_);
}

Scalar Laurent::value_at_zero() const {
  if (!terms_.empty() && terms_.front().first < 0) throw PoleError(terms_.front().first);
  return coefficient(0);
}

Scalar Laurent::evaluate(const Scalar& t) const {
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) acc += c * t.pow(e);
  return acc;
}

Laurent Laurent::substitute_power(int m) const {
  if (m < 1) throw DomainError("t -> t^m needs m >= 1");
  Laurent r = *this;
  for (auto& term : r.terms_) term.first *= m;
  return r;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& term : r.terms_) term.first += k;
  return r;
}

Laurent Laurent::frobenius() const {
  auto p = static_cast<int>(field_.characteristic());
  if (p == 0) throw DomainError("Frobenius needs positive characteristic");
  return substitute_power(p);
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (field_ != o.field_) throw DomainError("ring mismatch in Laurent addition");
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.cbegin();
  auto b = o.terms_.cbegin();
  while (a != terms_.cend() || b != o.terms_.cend()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Scalar s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent& Laurent::operator*=(const Laurent& o) {
  if (field_ != o.field_) throw DomainError("ring mismatch in Laurent multiplication");
  if (terms_.empty() || o.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (o.terms_.size() == 1) {
    for (auto& term : terms_) {
      term.first += o.terms_[0].first;
      term.second *= o.terms_[0].second;
    }
    return *this;
  }
  std::map<int, Scalar> acc;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      auto [it, fresh] = acc.try_emplace(ea + eb, ca * cb);
      if (!fresh) it->second += ca * cb;
    }
  }
  terms_.clear();
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) terms_.emplace_back(e, std::move(c));
  }
  return *this;
}

std::optional<Laurent> Laurent::try_divide(const Laurent& d) const {
  if (d.field_ != field_) throw DomainError("ring mismatch in Laurent division");
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return *this;
  if (d.terms_.size() == 1) {
    Laurent r = *this;
    Scalar inv = d.terms_[0].second.inverse();
    for (auto& term : r.terms_) {
      term.first -= d.terms_[0].first;
      term.second *= inv;
    }
    return r;
  }
  // Long division from the top exponent; the quotient can only live in a bounded window.
  Laurent rem = *this;
  Laurent quot(field_);
  const int dtop = d.terms_.back().first;
  const Scalar dlead_inv = d.terms_.back().second.inverse();
  const int dspan = dtop - d.terms_.front().first;
  while (!rem.is_zero()) {
    int rtop = rem.terms_.back().first;
    if (rtop - rem.terms_.front().first < dspan) return std::nullopt;
    Laurent q = monomial(rem.terms_.back().second * dlead_inv, rtop - dtop);
    quot += q;
    rem -= q * d;
  }
  return quot;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << cs << "*";
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace paut
