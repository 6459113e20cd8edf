#pragma once

// Truncated power series with exact rational coefficients.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hopfcomb/error.hpp"
#include "hopfcomb/numeric.hpp"
#include "hopfcomb/trees.hpp"

namespace hopfcomb {

  //! c_0 + c_1 z + ... + c_N z^N, everything above N discarded. Binary
  //! operations on different orders truncate to the smaller one.
  class TruncatedSeries {
   public:
    explicit TruncatedSeries(std::size_t order) : _c(order + 1) {}

    explicit TruncatedSeries(std::vector<Rational> coefficients) : _c(std::move(coefficients)) {
      if (_c.empty()) {
        throw Error(ErrorKind::invalid_argument, "a series needs at least one coefficient");
      }
    }

    [[nodiscard]] static TruncatedSeries one(std::size_t order) {
      return monomial(1, 0, order);
    }

    [[nodiscard]] static TruncatedSeries monomial(Rational c, std::size_t degree, std::size_t order) {
      TruncatedSeries s(order);
      if (degree <= order) {
        s._c[degree] = std::move(c);
      }
      return s;
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _c.size() - 1;
    }

    [[nodiscard]] Rational const& operator[](std::size_t n) const {
      return _c.at(n);
    }

    [[nodiscard]] std::vector<Rational> const& coefficients() const noexcept {
      return _c;
    }

    [[nodiscard]] TruncatedSeries truncate(std::size_t order) const {
      return TruncatedSeries(
          std::vector<Rational>(_c.begin(), _c.begin() + std::min(order, this->order()) + 1));
    }

    friend TruncatedSeries operator+(TruncatedSeries const& a, TruncatedSeries const& b) {
      TruncatedSeries out(std::min(a.order(), b.order()));
      for (std::size_t n = 0; n <= out.order(); ++n) {
        out._c[n] = a._c[n] + b._c[n];
      }
      return out;
    }

    friend TruncatedSeries operator-(TruncatedSeries const& a, TruncatedSeries const& b) {
      return a + (-1) * b;
    }

    //! Cauchy product.
    friend TruncatedSeries operator*(TruncatedSeries const& a, TruncatedSeries const& b) {
      TruncatedSeries out(std::min(a.order(), b.order()));
      for (std::size_t i = 0; i <= out.order(); ++i) {
        if (a._c[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; i + j <= out.order(); ++j) {
          out._c[i + j] += a._c[i] * b._c[j];
        }
      }
      return out;
    }

    friend TruncatedSeries operator*(Rational const& k, TruncatedSeries s) {
      for (auto& c : s._c) {
        c *= k;
      }
      return s;
    }

    friend bool operator==(TruncatedSeries const&, TruncatedSeries const&) = default;

   private:
    std::vector<Rational> _c;
  };

  [[nodiscard]] inline TruncatedSeries add(TruncatedSeries const& a, TruncatedSeries const& b) {
    return a + b;
  }

  [[nodiscard]] inline TruncatedSeries mul(TruncatedSeries const& a, TruncatedSeries const& b) {
    return a * b;
  }

  [[nodiscard]] inline TruncatedSeries scalar_mul(Rational const& k, TruncatedSeries const& s) {
    return k * s;
  }

  //! Sum c_n z^(n+1)/(n+1), at the same order.
  [[nodiscard]] inline TruncatedSeries integrate(TruncatedSeries const& s) {
    std::vector<Rational> c(s.order() + 1);
    for (std::size_t n = 0; n < s.order(); ++n) {
      c[n + 1] = s[n] / (n + 1);
    }
    return TruncatedSeries(std::move(c));
  }

  //! Sum n c_n z^(n-1); the order drops by one (an order 0 series stays 0).
  [[nodiscard]] inline TruncatedSeries derivative(TruncatedSeries const& s) {
    if (s.order() == 0) {
      return TruncatedSeries(std::size_t(0));
    }
    std::vector<Rational> c(s.order());
    for (std::size_t n = 1; n <= s.order(); ++n) {
      c[n - 1] = s[n] * n;
    }
    return TruncatedSeries(std::move(c));
  }

  //! 1 + z + ... + z^N.
  [[nodiscard]] inline TruncatedSeries geometric(std::size_t order) {
    return TruncatedSeries(std::vector<Rational>(order + 1, Rational(1)));
  }

  //! Generating series of trees with multiplicities by size: the solution of
  //! S = 1 + t S^2 / (1 - t), by N + 1 fixed-point steps.
  [[nodiscard]] inline TruncatedSeries solve_btm_series(std::size_t order) {
    auto const      one = TruncatedSeries::one(order);
    auto const      t_over = TruncatedSeries::monomial(1, 1, order) * geometric(order);
    TruncatedSeries s   = one;
    for (std::size_t i = 0; i <= order; ++i) {
      s = one + t_over * s * s;
    }
    return s;
  }

  //! x = 1 + sum_{k=1..K} int_0^z s^(k-1)/(k-1)! x(s)^2 ds, the truncation of
  //! x = 1 + int_0^z e^s x(s)^2 ds to K operators.
  [[nodiscard]] inline TruncatedSeries solve_exp_fixed_point(std::size_t order, std::size_t K) {
    if (K < order) {
      throw Error(ErrorKind::truncation_insufficient,
                  "K = " + std::to_string(K) + " operators cannot reach order "
                      + std::to_string(order));
    }
    TruncatedSeries kernel(order);
    for (std::size_t k = 1; k <= K && k - 1 <= order; ++k) {
      kernel = kernel
               + TruncatedSeries::monomial(Rational(1) / Rational(factorial(k - 1)), k - 1, order);
    }
    auto const      one = TruncatedSeries::one(order);
    TruncatedSeries x   = one;
    for (std::size_t i = 0; i <= order; ++i) {
      x = one + integrate(kernel * x * x);
    }
    return x;
  }

  namespace detail {
    inline std::pair<Rational, std::size_t> b_tree_eval(Btm const& t) {
      if (t.empty()) {
        return {Rational(1), 0};
      }
      auto const [a, p] = b_tree_eval(t.left());
      auto const [b, q] = b_tree_eval(t.right());
      std::size_t const k = t.label();
      std::size_t const d = p + q + k;
      return {a * b / Rational(factorial(k - 1)) / d, d};
    }
  }  // namespace detail

  //! B_T(1) evaluated on series: a monomial c z^|T|.
  [[nodiscard]] inline std::pair<Rational, std::size_t> b_tree_eval(Btm const& t) {
    if (t.empty()) {
      throw Error(ErrorKind::undefined_on_empty, "B_T(1) needs a non-empty tree");
    }
    return detail::b_tree_eval(t);
  }

  [[nodiscard]] inline std::string to_string(Rational const& r) {
    return r.str();
  }

  //! "c0 + c1*z + c2*z^2 + ...", zero terms omitted.
  [[nodiscard]] inline std::string to_string(TruncatedSeries const& s) {
    std::string out;
    for (std::size_t n = 0; n <= s.order(); ++n) {
      Rational const& c = s[n];
      if (c == 0) {
        continue;
      }
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      Rational const a = abs(c);
      if (n == 0) {
        out += to_string(a);
      } else {
        out += a == 1 ? "z" : to_string(a) + "*z";
      }
      if (n >= 2) {
        out += "^" + std::to_string(n);
      }
    }
    return out.empty() ? "0" : out;
  }

}  // namespace hopfcomb
