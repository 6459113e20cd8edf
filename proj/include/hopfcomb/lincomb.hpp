#pragma once

// Finite linear combinations with exact integer coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "hopfcomb/error.hpp"

namespace hopfcomb {

  using Coefficient = std::int64_t;

  [[nodiscard]] inline Coefficient checked_add(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw Error(ErrorKind::overflow, "coefficient addition overflows");
    }
    return r;
  }

  [[nodiscard]] inline Coefficient checked_mul(Coefficient a, Coefficient b) {
    Coefficient r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw Error(ErrorKind::overflow, "coefficient multiplication overflows");
    }
    return r;
  }

  //! Map from basis indices to nonzero coefficients. Terms are kept sorted by
  //! index, so iteration order is canonical.
  template <typename Index>
  class LinComb {
   public:
    using index_type = Index;
    using map_type   = std::map<Index, Coefficient>;

    LinComb() = default;

    explicit LinComb(Index i, Coefficient c = 1) {
      add(std::move(i), c);
    }

    void add(Index const& i, Coefficient c) {
      if (c == 0) {
        return;
      }
      auto [it, fresh] = _terms.try_emplace(i, c);
      if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) {
          _terms.erase(it);
        }
      }
    }

    [[nodiscard]] Coefficient coefficient(Index const& i) const {
      auto it = _terms.find(i);
      return it == _terms.end() ? 0 : it->second;
    }

    [[nodiscard]] bool empty() const noexcept {
      return _terms.empty();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _terms.size();
    }

    [[nodiscard]] map_type const& terms() const noexcept {
      return _terms;
    }

    [[nodiscard]] auto begin() const noexcept {
      return _terms.begin();
    }

    [[nodiscard]] auto end() const noexcept {
      return _terms.end();
    }

    LinComb& operator+=(LinComb const& other) {
      for (auto const& [i, c] : other._terms) {
        add(i, c);
      }
      return *this;
    }

    LinComb& operator-=(LinComb const& other) {
      for (auto const& [i, c] : other._terms) {
        add(i, checked_mul(c, -1));
      }
      return *this;
    }

    LinComb& operator*=(Coefficient k) {
      if (k == 0) {
        _terms.clear();
      }
      for (auto& [i, c] : _terms) {
        c = checked_mul(c, k);
      }
      return *this;
    }

    friend LinComb operator+(LinComb a, LinComb const& b) {
      return a += b;
    }

    friend LinComb operator-(LinComb a, LinComb const& b) {
      return a -= b;
    }

    friend LinComb operator*(Coefficient k, LinComb a) {
      return a *= k;
    }

    friend bool operator==(LinComb const&, LinComb const&) = default;

   private:
    map_type _terms;
  };

  template <typename Index>
  using Tensor2 = LinComb<std::pair<Index, Index>>;

  template <typename Index>
  using Tensor3 = LinComb<std::tuple<Index, Index, Index>>;

  //! Linear extension of f : Index -> LinComb<Out>.
  template <typename Out, typename Index, typename F>
  [[nodiscard]] LinComb<Out> linear(LinComb<Index> const& x, F&& f) {
    LinComb<Out> out;
    for (auto const& [i, c] : x) {
      for (auto const& [j, d] : f(i)) {
        out.add(j, checked_mul(c, d));
      }
    }
    return out;
  }

  //! Bilinear extension of f : Index x Index -> LinComb<Out>.
  template <typename Out, typename A, typename B, typename F>
  [[nodiscard]] LinComb<Out> bilinear(LinComb<A> const& x, LinComb<B> const& y, F&& f) {
    LinComb<Out> out;
    for (auto const& [i, c] : x) {
      for (auto const& [j, d] : y) {
        auto const cd = checked_mul(c, d);
        for (auto const& [k, e] : f(i, j)) {
          out.add(k, checked_mul(cd, e));
        }
      }
    }
    return out;
  }

  //! Relabels indices through g, merging terms that collide.
  template <typename Out, typename Index, typename G>
  [[nodiscard]] LinComb<Out> map_indices(LinComb<Index> const& x, G&& g) {
    LinComb<Out> out;
    for (auto const& [i, c] : x) {
      out.add(g(i), c);
    }
    return out;
  }

  template <typename A, typename B>
  [[nodiscard]] LinComb<std::pair<typename A::index_type, typename B::index_type>>
  tensor(A const& x, B const& y) {
    using P = std::pair<typename A::index_type, typename B::index_type>;
    LinComb<P> out;
    for (auto const& [i, c] : x) {
      for (auto const& [j, d] : y) {
        out.add(P{i, j}, checked_mul(c, d));
      }
    }
    return out;
  }

}  // namespace hopfcomb
