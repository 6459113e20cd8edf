#pragma once

// Polynomial realizations of the m-bases indexed by canonical words, and the
// Hopf algebras they define: FQSym for standardization, WQSym for packing.

#include <bit>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "hopfcomb/basis.hpp"
#include "hopfcomb/error.hpp"
#include "hopfcomb/lincomb.hpp"
#include "hopfcomb/word.hpp"

namespace hopfcomb {

  namespace detail {
    inline void require_canonical(PhiMap phi, Word const& u) {
      if (!is_canonical(phi, u)) {
        throw Error(ErrorKind::invalid_index,
                    to_string(u) + " is not canonical for " + std::string(to_string(phi)));
      }
    }

    // Letters of the bit set `mask`, increasing.
    inline std::vector<Letter> letters_of(std::uint64_t mask) {
      std::vector<Letter> out;
      for (Letter l = 1; mask != 0; ++l, mask >>= 1) {
        if (mask & 1) {
          out.push_back(l);
        }
      }
      return out;
    }

    inline void relabel_into(std::vector<Letter>&       out,
                             Word const&                u,
                             std::vector<Letter> const& values) {
      for (Letter l : u) {
        out.push_back(values[l - 1]);
      }
    }
  }  // namespace detail

  //! Sum of the words over {1..N} of length |u| that phi maps to u.
  [[nodiscard]] inline LinComb<Word> realize(PhiMap phi, Word const& u, std::size_t N) {
    detail::require_canonical(phi, u);
    if (N < u.max_letter()) {
      throw Error(ErrorKind::invalid_argument,
                  "alphabet size " + std::to_string(N) + " is smaller than the largest letter of "
                      + to_string(u));
    }
    LinComb<Word> out;
    for_each_word(static_cast<Letter>(N), u.size(), [&](Word const& w) {
      if (apply_phi(phi, w) == u) {
        out.add(w, 1);
      }
    });
    return out;
  }

  //! m_u x m_v: canonical words u'v' with phi(u') = u and phi(v') = v. Every
  //! such word is obtained once by choosing the value sets A of u' and B of v'
  //! with A u B = {1..m}.
  [[nodiscard]] inline LinComb<Word> m_product(PhiMap phi, Word const& u, Word const& v) {
    detail::require_canonical(phi, u);
    detail::require_canonical(phi, v);
    std::size_t const a = u.max_letter(), b = v.max_letter();
    LinComb<Word>     out;
    std::vector<Letter> buffer;
    if (a + b >= 32) {
      throw Error(ErrorKind::bound_exceeded, "product degree too large");
    }
    for (std::size_t m = std::max(a, b); m <= a + b; ++m) {
      std::uint64_t const full = (std::uint64_t(1) << m) - 1;
      for (std::uint64_t A = 0; A <= full; ++A) {
        if (static_cast<std::size_t>(std::popcount(A)) != a) {
          continue;
        }
        std::uint64_t const forced = full & ~A;
        if (static_cast<std::size_t>(std::popcount(forced)) > b) {
          continue;
        }
        std::size_t const extra = b - std::popcount(forced);
        // all submasks S of A with |S| = extra
        for (std::uint64_t S = A;; S = (S - 1) & A) {
          if (static_cast<std::size_t>(std::popcount(S)) == extra) {
            buffer.clear();
            detail::relabel_into(buffer, u, detail::letters_of(A));
            detail::relabel_into(buffer, v, detail::letters_of(forced | S));
            Word w(buffer);
            if (is_canonical(phi, w)) {
              out.add(w, 1);
            }
          }
          if (S == 0) {
            break;
          }
        }
      }
    }
    return out;
  }

  //! Coproduct obtained from the alphabet doubling: cut the values of u at
  //! every i in 0..max(u).
  [[nodiscard]] inline Tensor2<Word> m_coproduct(PhiMap phi, Word const& u) {
    detail::require_canonical(phi, u);
    Letter const  top = u.max_letter();
    Tensor2<Word> out;
    for (Letter i = 0; i <= top; ++i) {
      Word low  = i == 0 ? Word{} : apply_phi(phi, restrict(u, 1, i));
      Word high = i == top ? Word{} : apply_phi(phi, restrict(u, i + 1, top));
      out.add({std::move(low), std::move(high)}, 1);
    }
    return out;
  }

  namespace detail {
    // r(m_u) over the doubled alphabet {1..2N}, with low and high letters
    // commuting: each word becomes the pair of its low and high subwords.
    inline Tensor2<Word> doubled_realization(PhiMap phi, Word const& u, std::size_t N) {
      Tensor2<Word> out;
      for (auto const& [w, c] : realize(phi, u, 2 * N)) {
        std::vector<Letter> low, high;
        for (Letter l : w) {
          if (l <= N) {
            low.push_back(l);
          } else {
            high.push_back(l - static_cast<Letter>(N));
          }
        }
        out.add({Word(std::move(low)), Word(std::move(high))}, c);
      }
      return out;
    }

    inline bool doubling_holds(PhiMap phi, Word const& u, std::size_t N) {
      Tensor2<Word> rhs;
      for (auto const& [pair, c] : m_coproduct(phi, u)) {
        auto t = tensor(realize(phi, pair.first, N), realize(phi, pair.second, N));
        rhs += c * t;
      }
      return doubled_realization(phi, u, N) == rhs;
    }
  }  // namespace detail

  //! Checks on explicit polynomials over {1..N} that the realization is an
  //! algebra morphism for m_u x m_v, and that the doubling identity holds for
  //! the coproducts of m_u and m_v.
  [[nodiscard]] inline bool
  check_realization(PhiMap phi, Word const& u, Word const& v, std::size_t N) {
    if (N < u.size() + v.size()) {
      throw Error(ErrorKind::invalid_argument,
                  "alphabet size must be at least |u| + |v| = "
                      + std::to_string(u.size() + v.size()));
    }
    auto const lhs = bilinear<Word>(realize(phi, u, N), realize(phi, v, N),
                                    [](Word const& x, Word const& y) {
                                      return LinComb<Word>(concat(x, y));
                                    });
    LinComb<Word> rhs;
    for (auto const& [w, c] : m_product(phi, u, v)) {
      rhs += c * realize(phi, w, N);
    }
    return lhs == rhs && detail::doubling_holds(phi, u, N) && detail::doubling_holds(phi, v, N);
  }

  //! The Hopf algebra spanned by m_u for u canonical for Phi.
  template <PhiMap Phi>
  class PhiAlgebra {
   public:
    using index_type = std::
        conditional_t<Phi == PhiMap::standardization, PermutationIndex, PackedWordIndex>;

    static constexpr PhiMap phi = Phi;

    [[nodiscard]] std::string name() const {
      return Phi == PhiMap::standardization ? "FQSym" : "WQSym";
    }

    [[nodiscard]] index_type unit() const {
      return index_type{Word{}};
    }

    [[nodiscard]] std::vector<index_type> basis(std::size_t n) const {
      std::vector<index_type> out;
      for (auto& w : enumerate_canonical(Phi, n)) {
        out.push_back(index_type{std::move(w)});
      }
      return out;
    }

    [[nodiscard]] LinComb<index_type> product(index_type const& a, index_type const& b) const {
      return map_indices<index_type>(m_product(Phi, a.word, b.word),
                                     [](Word const& w) { return index_type{w}; });
    }

    [[nodiscard]] Tensor2<index_type> coproduct(index_type const& a) const {
      using P = std::pair<index_type, index_type>;
      return map_indices<P>(m_coproduct(Phi, a.word), [](std::pair<Word, Word> const& p) {
        return P{index_type{p.first}, index_type{p.second}};
      });
    }
  };

  using Fqsym = PhiAlgebra<PhiMap::standardization>;
  using Wqsym = PhiAlgebra<PhiMap::packing>;

}  // namespace hopfcomb
