#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace gyro {

// A backend supplies the carrier operations of a gyrogroup candidate:
// binary addition, negation, the identity element, and element equality.
// Everything else (gyration, coaddition, iterated addition) is derived.
template <typename B>
concept GyroBackend = requires(const B b,
                               const typename B::element_type& x,
                               const typename B::element_type& y) {
  typename B::element_type;
  { b.add(x, y) } -> std::convertible_to<typename B::element_type>;
  { b.neg(x) } -> std::convertible_to<typename B::element_type>;
  { b.identity() } -> std::convertible_to<typename B::element_type>;
  { b.eq(x, y) } -> std::convertible_to<bool>;
};

// Backend with a finite, indexable carrier (enables exhaustive sweeps).
template <typename B>
concept FiniteCarrier = GyroBackend<B> && requires(const B b, int i) {
  { b.order() } -> std::convertible_to<int>;
  { b.element(i) } -> std::convertible_to<typename B::element_type>;
};

// gyr[a,b]c, always derived from the carrier operations:
//   gyr[a,b]c = -(a+b) + (a + (b+c)).
// Backends may provide a precomputed gyr(a,b,c); it is preferred when present.
template <GyroBackend B>
typename B::element_type gyr(const B& b, const typename B::element_type& x,
                             const typename B::element_type& y,
                             const typename B::element_type& z) {
  if constexpr (requires { { b.gyr(x, y, z) } -> std::convertible_to<typename B::element_type>; }) {
    return b.gyr(x, y, z);
  } else {
    return b.add(b.neg(b.add(x, y)), b.add(x, b.add(y, z)));
  }
}

// Coaddition: a [+] b = a + gyr[a,-b]b.
template <GyroBackend B>
typename B::element_type coadd(const B& b, const typename B::element_type& x,
                               const typename B::element_type& y) {
  return b.add(x, gyr(b, x, b.neg(y), y));
}

// Cosubtraction: a [-] b = a [+] (-b).
template <GyroBackend B>
typename B::element_type cosub(const B& b, const typename B::element_type& x,
                               const typename B::element_type& y) {
  return coadd(b, x, b.neg(y));
}

// n.x for n >= 1, left-associated: ((x+x)+x)+...
template <GyroBackend B>
typename B::element_type iterated_add(const B& b, const typename B::element_type& x, int n) {
  if (n < 1) throw std::invalid_argument("iterated_add: n must be >= 1");
  typename B::element_type acc = x;
  for (int i = 1; i < n; ++i) acc = b.add(acc, x);
  return acc;
}

}  // namespace gyro
