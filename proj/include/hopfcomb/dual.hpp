#pragma once

// Dual bases. S_u is the dual of M_u in WQSym*, P^m_T the dual of Q^m_T in
// PBTm*, realized inside WQSym* as the sum of S_u over the fiber of T. The
// B_k operators build P^m_T recursively along T.

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hopfcomb/basis.hpp"
#include "hopfcomb/error.hpp"
#include "hopfcomb/lincomb.hpp"
#include "hopfcomb/quotient.hpp"
#include "hopfcomb/trees.hpp"

namespace hopfcomb {

  namespace detail {
    inline void require_packed(Word const& u) {
      if (!is_canonical(PhiMap::packing, u)) {
        throw Error(ErrorKind::invalid_index, to_string(u) + " is not a packed word");
      }
    }

    inline Word shifted(Word const& v, Letter by) {
      std::vector<Letter> out;
      out.reserve(v.size());
      for (Letter l : v) {
        out.push_back(l + by);
      }
      return Word(std::move(out));
    }

    // Adds every interleaving of a and b (as words) to out with coefficient c.
    inline void shuffle_into(Word const& a, Word const& b, Coefficient c, LinComb<Word>& out) {
      std::size_t const   n = a.size() + b.size();
      std::vector<bool>   from_b(n, false);
      std::fill(from_b.end() - static_cast<std::ptrdiff_t>(b.size()), from_b.end(), true);
      std::vector<Letter> w(n);
      do {
        std::size_t i = 0, j = 0;
        for (std::size_t p = 0; p < n; ++p) {
          w[p] = from_b[p] ? b[j++] : a[i++];
        }
        out.add(Word(w), c);
      } while (std::next_permutation(from_b.begin(), from_b.end()));
    }

    inline LinComb<Word> shuffle(LinComb<Word> const& x, Word const& b) {
      LinComb<Word> out;
      for (auto const& [a, c] : x) {
        shuffle_into(a, b, c, out);
      }
      return out;
    }
  }  // namespace detail

  //! S_u . S_v: shuffles of u with v shifted by max(u).
  [[nodiscard]] inline LinComb<Word> s_product(Word const& u, Word const& v) {
    detail::require_packed(u);
    detail::require_packed(v);
    LinComb<Word> out;
    detail::shuffle_into(u, detail::shifted(v, u.max_letter()), 1, out);
    return out;
  }

  //! Deconcatenation, each factor packed.
  [[nodiscard]] inline Tensor2<Word> s_coproduct(Word const& w) {
    detail::require_packed(w);
    Tensor2<Word> out;
    auto const&   l = w.letters();
    for (std::size_t i = 0; i <= l.size(); ++i) {
      out.add({pack(Word(std::vector<Letter>(l.begin(), l.begin() + i))),
               pack(Word(std::vector<Letter>(l.begin() + i, l.end())))},
              1);
    }
    return out;
  }

  //! WQSym*, the graded dual of WQSym in the basis S_u.
  class WqsymDual {
   public:
    using index_type = Dual<PackedWordIndex>;

    [[nodiscard]] std::string name() const {
      return "WQSym*";
    }

    [[nodiscard]] index_type unit() const {
      return {PackedWordIndex{Word{}}};
    }

    [[nodiscard]] std::vector<index_type> basis(std::size_t n) const {
      std::vector<index_type> out;
      for (auto& w : enumerate_canonical(PhiMap::packing, n)) {
        out.push_back({PackedWordIndex{std::move(w)}});
      }
      return out;
    }

    [[nodiscard]] LinComb<index_type> product(index_type const& a, index_type const& b) const {
      return map_indices<index_type>(s_product(a.index.word, b.index.word), wrap);
    }

    [[nodiscard]] Tensor2<index_type> coproduct(index_type const& a) const {
      using P = std::pair<index_type, index_type>;
      return map_indices<P>(s_coproduct(a.index.word), [](std::pair<Word, Word> const& p) {
        return P{wrap(p.first), wrap(p.second)};
      });
    }

   private:
    static index_type wrap(Word const& w) {
      return {PackedWordIndex{w}};
    }
  };

  //! P^m_T = sum of S_u over the packed words u with btm_of_word(u) = T.
  [[nodiscard]] inline LinComb<Word> pm_element(Btm const&  t,
                                                std::size_t cap = default_fiber_cap) {
    LinComb<Word> out;
    for (auto& w : fiber(t, cap)) {
      out.add(std::move(w), 1);
    }
    return out;
  }

  //! Regroups a combination of S_u into the P^m basis. Every fiber must be
  //! present entirely with a single coefficient.
  [[nodiscard]] inline LinComb<Dual<BtmIndex>> regroup_pm(LinComb<Word> const& x) {
    std::map<Btm, std::vector<Coefficient>> grouped;
    for (auto const& [w, c] : x) {
      grouped[btm_of_word(w)].push_back(c);
    }
    LinComb<Dual<BtmIndex>> out;
    for (auto const& [t, coeffs] : grouped) {
      bool const uniform = std::adjacent_find(coeffs.begin(), coeffs.end(), std::not_equal_to<>())
                           == coeffs.end();
      if (!uniform || (!t.empty() && hook_count(t) != coeffs.size())
          || (t.empty() && coeffs.size() != 1)) {
        throw Error(ErrorKind::internal_inconsistency,
                    "the S-expansion does not regroup along the fiber of " + to_string(t));
      }
      out.add({BtmIndex{t}}, coeffs.front());
    }
    return out;
  }

  //! P^m_{T1} . P^m_{T2}, computed in WQSym* and regrouped.
  [[nodiscard]] inline LinComb<Dual<BtmIndex>>
  pm_product(Btm const& t1, Btm const& t2, std::size_t cap = default_fiber_cap) {
    LinComb<Word> expansion;
    for (auto const& [u, c] : pm_element(t1, cap)) {
      for (auto const& [v, d] : pm_element(t2, cap)) {
        auto p = s_product(u, v);
        p *= checked_mul(c, d);
        expansion += p;
      }
    }
    return regroup_pm(expansion);
  }

  namespace detail {
    using PmCoproductTable = std::map<Btm, Tensor2<Dual<BtmIndex>>>;

    // For every tree of size n, the coefficients <Q^m_A x Q^m_B, P^m_T>.
    inline PmCoproductTable pm_coproduct_table(std::size_t n) {
      Pbtm             algebra;
      PmCoproductTable table;
      for (std::size_t k = 0; k <= n; ++k) {
        auto const left  = enumerate_btm(k);
        auto const right = enumerate_btm(n - k);
        for (auto const& a : left) {
          for (auto const& b : right) {
            for (auto const& [t, c] : algebra.product(BtmIndex{a}, BtmIndex{b})) {
              table[t.tree].add({Dual<BtmIndex>{BtmIndex{a}}, Dual<BtmIndex>{BtmIndex{b}}}, c);
            }
          }
        }
      }
      return table;
    }

    inline PmCoproductTable const& pm_coproduct_cached(std::size_t n) {
      static Memo<std::size_t, PmCoproductTable> memo;
      return memo.get(n, [n] { return pm_coproduct_table(n); });
    }
  }  // namespace detail

  //! Coproduct of P^m_T, dual to the product of PBTm.
  [[nodiscard]] inline Tensor2<Dual<BtmIndex>> pm_coproduct(Btm const& t) {
    if (t.size() > default_fiber_cap) {
      throw Error(ErrorKind::bound_exceeded,
                  "dual coproduct limited to size " + std::to_string(default_fiber_cap));
    }
    auto const& table = detail::pm_coproduct_cached(t.size());
    auto        it    = table.find(t);
    return it == table.end() ? Tensor2<Dual<BtmIndex>>{} : it->second;
  }

  //! PBTm*, the graded dual of PBTm in the basis P^m_T.
  class PbtmDual {
   public:
    using index_type = Dual<BtmIndex>;

    [[nodiscard]] std::string name() const {
      return "PBTm*";
    }

    [[nodiscard]] index_type unit() const {
      return {BtmIndex{Btm()}};
    }

    [[nodiscard]] std::vector<index_type> basis(std::size_t n) const {
      std::vector<index_type> out;
      for (auto& t : enumerate_btm(n)) {
        out.push_back({BtmIndex{std::move(t)}});
      }
      return out;
    }

    [[nodiscard]] LinComb<index_type> product(index_type const& a, index_type const& b) const {
      return pm_product(a.index.tree, b.index.tree);
    }

    [[nodiscard]] Tensor2<index_type> coproduct(index_type const& a) const {
      return pm_coproduct(a.index.tree);
    }
  };

  //! B_k(S_u, S_v): shuffles of u, r^(k-1) and v shifted by r, followed by
  //! the letter r = max(u) + 1. Extended bilinearly.
  [[nodiscard]] inline LinComb<Word>
  bk_apply(std::size_t k, LinComb<Word> const& x, LinComb<Word> const& y) {
    if (k < 1) {
      throw Error(ErrorKind::invalid_arity, "B_k needs k >= 1");
    }
    LinComb<Word> out;
    for (auto const& [u, c] : x) {
      detail::require_packed(u);
      Letter const r = u.max_letter() + 1;
      auto const   with_root =
          detail::shuffle(LinComb<Word>(u, c), Word(std::vector<Letter>(k - 1, r)));
      for (auto const& [v, d] : y) {
        detail::require_packed(v);
        for (auto const& [w, e] : detail::shuffle(with_root, detail::shifted(v, r))) {
          out.add(concat(w, Word{r}), checked_mul(e, d));
        }
      }
    }
    return out;
  }

  //! B_T(1): the empty tree gives S_ε, a node of multiplicity k applies B_k to
  //! the lifts of its subtrees.
  [[nodiscard]] inline LinComb<Word> b_tree_lift(Btm const& t) {
    if (t.empty()) {
      return LinComb<Word>(Word{});
    }
    return bk_apply(t.label(), b_tree_lift(t.left()), b_tree_lift(t.right()));
  }

}  // namespace hopfcomb
