#include "paut/poly_kernels.hpp"

#include <algorithm>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "paut/field.hpp"
#include "paut/laurent.hpp"

namespace paut::kernels {

namespace {

template <class C>
using Accumulator = std::unordered_map<Monomial, C, MonomialHash>;

template <class C>
void accumulate(Accumulator<C>& acc, std::span<const std::pair<Monomial, C>> a,
                std::span<const std::pair<Monomial, C>> b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    for (const auto& [mb, cb] : b) {
      C prod = a[i].second * cb;
      auto [it, fresh] = acc.try_emplace(a[i].first * mb, prod);
      if (!fresh) it->second += prod;
    }
  }
}

template <class C>
Terms<C> finish(Accumulator<C>& acc) {
  Terms<C> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.emplace_back(m, std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return grlex(x.first, y.first) > 0; });
  return out;
}

constexpr std::size_t kParallelThreshold = 4096;

}  // namespace

template <class C>
Terms<C> mul_serial(std::span<const std::pair<Monomial, C>> a, std::span<const std::pair<Monomial, C>> b) {
  Accumulator<C> acc;
  acc.reserve(a.size() * b.size());
  accumulate(acc, a, b, 0, a.size());
  return finish(acc);
}

template <class C>
Terms<C> mul_parallel(std::span<const std::pair<Monomial, C>> a, std::span<const std::pair<Monomial, C>> b,
                      int threads) {
#ifdef _OPENMP
  int nt = threads > 0 ? threads : omp_get_max_threads();
  std::vector<Accumulator<C>> partial(static_cast<std::size_t>(nt));
#pragma omp parallel num_threads(nt)
  {
    auto id = static_cast<std::size_t>(omp_get_thread_num());
    auto count = static_cast<std::size_t>(omp_get_num_threads());
    std::size_t lo = a.size() * id / count, hi = a.size() * (id + 1) / count;
    partial[id].reserve((hi - lo) * b.size());
    accumulate(partial[id], a, b, lo, hi);
  }
  Accumulator<C>& total = partial[0];
  for (std::size_t i = 1; i < partial.size(); ++i) {
    for (auto& [m, c] : partial[i]) {
      auto [it, fresh] = total.try_emplace(m, c);
      if (!fresh) it->second += c;
    }
  }
  return finish(total);
#else
  (void)threads;
  return mul_serial(a, b);
#endif
}

template <class C>
Terms<C> multiply(std::span<const std::pair<Monomial, C>> a, std::span<const std::pair<Monomial, C>> b) {
#ifdef _OPENMP
  if (a.size() * b.size() >= kParallelThreshold && a.size() >= 2 && omp_get_max_threads() > 1)
    return mul_parallel(a, b);
#endif
  return mul_serial(a, b);
}

template Terms<Scalar> mul_serial(std::span<const std::pair<Monomial, Scalar>>,
                                  std::span<const std::pair<Monomial, Scalar>>);
template Terms<Laurent> mul_serial(std::span<const std::pair<Monomial, Laurent>>,
                                   std::span<const std::pair<Monomial, Laurent>>);
template Terms<Scalar> mul_parallel(std::span<const std::pair<Monomial, Scalar>>,
                                    std::span<const std::pair<Monomial, Scalar>>, int);
template Terms<Laurent> mul_parallel(std::span<const std::pair<Monomial, Laurent>>,
                                     std::span<const std::pair<Monomial, Laurent>>, int);
template Terms<Scalar> multiply(std::span<const std::pair<Monomial, Scalar>>,
                                std::span<const std::pair<Monomial, Scalar>>);
template Terms<Laurent> multiply(std::span<const std::pair<Monomial, Laurent>>,
                                 std::span<const std::pair<Monomial, Laurent>>);

}  // namespace paut::kernels
