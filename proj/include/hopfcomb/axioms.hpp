#pragma once

// Exhaustive verification of the bialgebra identities on small degrees.

#include <string>
#include <tuple>
#include <vector>

#include "hopfcomb/basis.hpp"
#include "hopfcomb/lincomb.hpp"

namespace hopfcomb {

  struct HopfReport {
    std::string              algebra;
    std::size_t              degree          = 0;
    bool                     associativity   = true;
    bool                     coassociativity = true;
    bool                     unit            = true;
    bool                     counit          = true;
    bool                     compatibility   = true;
    std::size_t              checks          = 0;
    std::vector<std::string> violations;

    [[nodiscard]] bool ok() const noexcept {
      return associativity && coassociativity && unit && counit && compatibility;
    }
  };

  template <typename Algebra>
  [[nodiscard]] LinComb<typename Algebra::index_type>
  multiply(Algebra const&                                  alg,
           LinComb<typename Algebra::index_type> const& x,
           LinComb<typename Algebra::index_type> const& y) {
    using I = typename Algebra::index_type;
    return bilinear<I>(x, y, [&](I const& a, I const& b) { return alg.product(a, b); });
  }

  template <typename Algebra>
  [[nodiscard]] Tensor2<typename Algebra::index_type>
  comultiply(Algebra const& alg, LinComb<typename Algebra::index_type> const& x) {
    using I = typename Algebra::index_type;
    return linear<std::pair<I, I>>(x, [&](I const& a) { return alg.coproduct(a); });
  }

  //! Componentwise product (a ⊗ b)(c ⊗ d) = ac ⊗ bd.
  template <typename Algebra>
  [[nodiscard]] Tensor2<typename Algebra::index_type>
  multiply(Algebra const&                                  alg,
           Tensor2<typename Algebra::index_type> const& x,
           Tensor2<typename Algebra::index_type> const& y) {
    using I = typename Algebra::index_type;
    using P = std::pair<I, I>;
    return bilinear<P>(x, y, [&](P const& p, P const& q) {
      return tensor(alg.product(p.first, q.first), alg.product(p.second, q.second));
    });
  }

  namespace detail {
    class Recorder {
     public:
      explicit Recorder(HopfReport& report) : _report(report) {}

      void expect(bool holds, bool& flag, std::string const& what) {
        ++_report.checks;
        if (!holds) {
          flag = false;
          if (_report.violations.size() < max_witnesses) {
            _report.violations.push_back(what);
          }
        }
      }

     private:
      static constexpr std::size_t max_witnesses = 16;
      HopfReport&                  _report;
    };
  }  // namespace detail

  //! Checks unit, counit, associativity, coassociativity and compatibility of
  //! product and coproduct on all basis elements of total degree <= n.
  template <typename Algebra>
  [[nodiscard]] HopfReport check_hopf_axioms(Algebra const& alg, std::size_t n) {
    using I = typename Algebra::index_type;
    using L = LinComb<I>;
    using T = std::tuple<I, I, I>;

    HopfReport report;
    report.algebra = alg.name();
    report.degree  = n;
    detail::Recorder record(report);

    std::vector<std::vector<I>> basis(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
      basis[d] = alg.basis(d);
    }
    I const one = alg.unit();

    for (std::size_t d = 0; d <= n; ++d) {
      for (auto const& x : basis[d]) {
        L const xl(x);
        auto const name = to_string(x);
        record.expect(alg.product(one, x) == xl && alg.product(x, one) == xl, report.unit,
                      "unit law fails at " + name);

        auto const delta = alg.coproduct(x);
        L          left, right;
        for (auto const& [p, c] : delta) {
          if (p.first == one) {
            right.add(p.second, c);
          }
          if (p.second == one) {
            left.add(p.first, c);
          }
        }
        record.expect(left == xl && right == xl, report.counit, "counit law fails at " + name);

        LinComb<T> lhs, rhs;
        for (auto const& [p, c] : delta) {
          for (auto const& [q, e] : alg.coproduct(p.first)) {
            lhs.add(T{q.first, q.second, p.second}, checked_mul(c, e));
          }
          for (auto const& [q, e] : alg.coproduct(p.second)) {
            rhs.add(T{p.first, q.first, q.second}, checked_mul(c, e));
          }
        }
        record.expect(lhs == rhs, report.coassociativity, "coassociativity fails at " + name);
      }
    }

    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; a + b <= n; ++b) {
        for (auto const& x : basis[a]) {
          for (auto const& y : basis[b]) {
            auto const xy = alg.product(x, y);
            record.expect(comultiply(alg, xy)
                              == multiply(alg, alg.coproduct(x), alg.coproduct(y)),
                          report.compatibility,
                          "compatibility fails at " + to_string(x) + ", " + to_string(y));
            for (std::size_t c = 0; a + b + c <= n; ++c) {
              for (auto const& z : basis[c]) {
                record.expect(multiply(alg, xy, L(z)) == multiply(alg, L(x), alg.product(y, z)),
                              report.associativity,
                              "associativity fails at " + to_string(x) + ", " + to_string(y)
                                  + ", " + to_string(z));
              }
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace hopfcomb
