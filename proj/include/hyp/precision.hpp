#pragma once

#include <complex>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace hyp {

using Extended = boost::multiprecision::cpp_bin_float_50;
using ExtendedComplex = boost::multiprecision::cpp_complex_50;

enum class Precision { Double, Extended };

template <class R>
struct complex_of;
template <>
struct complex_of<double> {
  using type = std::complex<double>;
};
template <>
struct complex_of<Extended> {
  using type = ExtendedComplex;
};

template <class R>
using Cx = typename complex_of<R>::type;

template <class R>
Cx<R> lift(std::complex<double> v) {
  return Cx<R>(R(v.real()), R(v.imag()));
}

template <class R>
std::complex<double> lower(const Cx<R>& v) {
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

}  // namespace hyp
