#pragma once

// Basis index families and their pretty names.

#include <compare>
#include <type_traits>
#include <string>
#include <tuple>
#include <utility>

#include "hopfcomb/lincomb.hpp"
#include "hopfcomb/trees.hpp"
#include "hopfcomb/word.hpp"

namespace hopfcomb {

  //! G_sigma, indexed by a permutation.
  struct PermutationIndex {
    Word word;
    friend auto operator<=>(PermutationIndex const&, PermutationIndex const&) = default;
  };

  //! M_u, indexed by a packed word.
  struct PackedWordIndex {
    Word word;
    friend auto operator<=>(PackedWordIndex const&, PackedWordIndex const&) = default;
  };

  //! A congruence class of canonical words, named by its least member.
  struct ClassIndex {
    std::string congruence;
    Word        representative;
    friend auto operator<=>(ClassIndex const&, ClassIndex const&) = default;
  };

  //! Q^m_T, indexed by a binary tree with multiplicities.
  struct BtmIndex {
    Btm tree;
    friend auto operator<=>(BtmIndex const&, BtmIndex const&) = default;
  };

  //! The dual basis element of an index.
  template <typename Index>
  struct Dual {
    Index index;
    friend auto operator<=>(Dual const&, Dual const&) = default;
  };

  [[nodiscard]] inline std::size_t degree(PermutationIndex const& i) {
    return i.word.size();
  }
  [[nodiscard]] inline std::size_t degree(PackedWordIndex const& i) {
    return i.word.size();
  }
  [[nodiscard]] inline std::size_t degree(ClassIndex const& i) {
    return i.representative.size();
  }
  [[nodiscard]] inline std::size_t degree(BtmIndex const& i) {
    return i.tree.size();
  }
  template <typename Index>
  [[nodiscard]] std::size_t degree(Dual<Index> const& i) {
    return degree(i.index);
  }

  [[nodiscard]] inline std::string to_string(PermutationIndex const& i) {
    return i.word.empty() ? "1" : "G_" + to_string(i.word);
  }
  [[nodiscard]] inline std::string to_string(PackedWordIndex const& i) {
    return i.word.empty() ? "1" : "M_" + to_string(i.word);
  }
  [[nodiscard]] inline std::string to_string(ClassIndex const& i) {
    return i.representative.empty() ? "1"
                                    : "Q^" + i.congruence + "_" + to_string(i.representative);
  }
  [[nodiscard]] inline std::string to_string(BtmIndex const& i) {
    return i.tree.empty() ? "1" : "Q^m_" + to_string(i.tree);
  }
  [[nodiscard]] inline std::string to_string(Dual<PermutationIndex> const& i) {
    return i.index.word.empty() ? "1" : "F_" + to_string(i.index.word);
  }
  [[nodiscard]] inline std::string to_string(Dual<PackedWordIndex> const& i) {
    return i.index.word.empty() ? "1" : "S_" + to_string(i.index.word);
  }
  [[nodiscard]] inline std::string to_string(Dual<ClassIndex> const& i) {
    return i.index.representative.empty()
               ? "1"
               : "P^" + i.index.congruence + "_" + to_string(i.index.representative);
  }
  [[nodiscard]] inline std::string to_string(Dual<BtmIndex> const& i) {
    return i.index.tree.empty() ? "1" : "P^m_" + to_string(i.index.tree);
  }

  template <typename A, typename B>
  [[nodiscard]] std::string to_string(std::pair<A, B> const& p) {
    return to_string(p.first) + " ⊗ " + to_string(p.second);
  }

  template <typename A, typename B, typename C>
  [[nodiscard]] std::string to_string(std::tuple<A, B, C> const& t) {
    return to_string(std::get<0>(t)) + " ⊗ " + to_string(std::get<1>(t)) + " ⊗ "
           + to_string(std::get<2>(t));
  }

  template <typename Index>
  [[nodiscard]] std::string to_string(LinComb<Index> const& x) {
    if (x.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [i, c] : x) {
      if (!first) {
        out += c < 0 ? " - " : " + ";
      } else if (c < 0) {
        out += "-";
      }
      first   = false;
      auto const a = c < 0 ? -c : c;
      if (a != 1) {
        out += std::to_string(a) + "*";
      }
      out += to_string(i);
    }
    return out;
  }

  //! Bilinear extension of the Kronecker pairing between a basis and its dual.
  //! Pairing two unrelated families does not compile; class indices of
  //! different congruences are rejected at run time.
  template <typename Index>
  [[nodiscard]] Coefficient pairing(LinComb<Index> const& x, LinComb<Dual<Index>> const& y) {
    if constexpr (std::is_same_v<Index, ClassIndex>) {
      for (auto const& [i, c] : x) {
        for (auto const& [j, d] : y) {
          if (i.congruence != j.index.congruence) {
            throw Error(ErrorKind::invalid_pairing,
                        "cannot pair classes of " + i.congruence + " with classes of "
                            + j.index.congruence);
          }
        }
      }
    }
    Coefficient out = 0;
    for (auto const& [i, c] : x) {
      out = checked_add(out, checked_mul(c, y.coefficient(Dual<Index>{i})));
    }
    return out;
  }

}  // namespace hopfcomb
