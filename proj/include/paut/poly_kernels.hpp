#pragma once

#include <span>
#include <utility>
#include <vector>

#include "paut/monomial.hpp"

namespace paut::kernels {

template <class C>
using Terms = std::vector<std::pair<Monomial, C>>;

// Reference product: one hash-map accumulation, then a grlex sort.
template <class C>
Terms<C> mul_serial(std::span<const std::pair<Monomial, C>> a, std::span<const std::pair<Monomial, C>> b);

// OpenMP product: the terms of a are split across threads, each with a private accumulator.
// threads <= 0 uses the OpenMP default.
template <class C>
Terms<C> mul_parallel(std::span<const std::pair<Monomial, C>> a, std::span<const std::pair<Monomial, C>> b,
                      int threads = 0);

// Picks the parallel kernel for large products when more than one thread is available.
template <class C>
Terms<C> multiply(std::span<const std::pair<Monomial, C>> a, std::span<const std::pair<Monomial, C>> b);

}  // namespace paut::kernels
