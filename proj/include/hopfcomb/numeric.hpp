#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

namespace hopfcomb {

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  [[nodiscard]] inline Integer factorial(std::size_t n) {
    Integer r = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  [[nodiscard]] inline Integer binomial(std::size_t n, std::size_t k) {
    if (k > n) {
      return 0;
    }
    return factorial(n) / (factorial(k) * factorial(n - k));
  }

}  // namespace hopfcomb
