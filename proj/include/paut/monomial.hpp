#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>

namespace paut {

inline constexpr int kMaxVars = 8;

// Exponent vector; unused trailing slots stay zero.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial variable(int index, int power = 1) {
    Monomial m;
    m.e_[static_cast<std::size_t>(index)] = power;
    return m;
  }

  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int v) { e_[static_cast<std::size_t>(i)] = v; }
  int total_degree() const {
    int d = 0;
    for (auto v : e_) d += v;
    return d;
  }
  bool is_one() const { return total_degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  Monomial scaled(int k) const {
    Monomial r;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * k;
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Graded lexicographic: total degree first, then x1 > x2 > ...
  friend std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.e_.size(); ++i) {
      if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : e_) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::int32_t, kMaxVars> e_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

}  // namespace paut
