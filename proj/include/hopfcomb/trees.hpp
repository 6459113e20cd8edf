#pragma once

// Binary search trees with multiplicities (BSTM), their letter-free shapes
// (BTM), insertion with P- and Q-symbols, BTM enumeration and the hook
// length count.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopfcomb/binary_tree.hpp"
#include "hopfcomb/error.hpp"
#include "hopfcomb/numeric.hpp"
#include "hopfcomb/word.hpp"

namespace hopfcomb {

  using Btm     = BinaryTree<Multiplicity>;
  using Bstm    = BinaryTree<LetterCount>;
  using QSymbol = BinaryTree<PositionSet>;

  //! Throws unless m >= 1.
  [[nodiscard]] inline Btm btm(Multiplicity m, Btm left = {}, Btm right = {}) {
    if (m == 0) {
      throw Error(ErrorKind::invalid_argument, "BTM multiplicities are >= 1");
    }
    return Btm(m, std::move(left), std::move(right));
  }

  ////////////////////////////////////////////////////////////////////////
  // Insertion
  ////////////////////////////////////////////////////////////////////////

  //! Smaller letters go to the left subtree, larger to the right; an equal
  //! letter bumps the node multiplicity.
  [[nodiscard]] inline Bstm bstm_insert(Bstm const& t, Letter l) {
    if (t.empty()) {
      return Bstm({l, 1}, {}, {});
    }
    auto const& lab = t.label();
    if (lab.letter == l) {
      return Bstm({l, lab.multiplicity + 1}, t.left(), t.right());
    }
    if (l < lab.letter) {
      return Bstm(lab, bstm_insert(t.left(), l), t.right());
    }
    return Bstm(lab, t.left(), bstm_insert(t.right(), l));
  }

  //! Inserts the letters of w from right to left into the empty tree.
  [[nodiscard]] inline Bstm p_symbol(Word const& w) {
    Bstm t;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      t = bstm_insert(t, *it);
    }
    return t;
  }

  [[nodiscard]] inline QSymbol q_symbol(Word const& w) {
    std::map<Letter, PositionSet> positions;
    for (std::size_t i = 0; i < w.size(); ++i) {
      positions[w[i]].push_back(i + 1);
    }
    return p_symbol(w).transform(
        [&positions](LetterCount const& lc) { return positions.at(lc.letter); });
  }

  [[nodiscard]] inline std::pair<Bstm, QSymbol> rs_pair(Word const& w) {
    return {p_symbol(w), q_symbol(w)};
  }

  [[nodiscard]] inline Word rs_inverse(Bstm const& p, QSymbol const& q) {
    if (!p.same_weighted_shape(q)) {
      throw Error(ErrorKind::invalid_pair,
                  "P and Q symbols differ in shape or multiplicities");
    }
    std::vector<Letter> out(p.size(), 0);
    std::vector<Letter> letters;
    p.for_each_prefix([&](Bstm const& n) { letters.push_back(n.label().letter); });
    std::size_t k = 0;
    q.for_each_prefix([&](QSymbol const& n) {
      Letter const l = letters[k++];
      for (std::size_t pos : n.label()) {
        if (pos == 0 || pos > out.size() || out[pos - 1] != 0) {
          throw Error(ErrorKind::invalid_pair,
                      "Q-symbol positions are not a partition of 1..n");
        }
        out[pos - 1] = l;
      }
    });
    return Word(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // BTM <-> BSTM
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline Btm strip(Bstm const& t) {
    return t.transform([](LetterCount const& lc) { return lc.multiplicity; });
  }

  namespace detail {
    inline Bstm relabel(Btm const& t, Letter& next) {
      if (t.empty()) {
        return {};
      }
      Bstm left = relabel(t.left(), next);
      Letter const l = next++;
      return Bstm({l, t.label()}, std::move(left), relabel(t.right(), next));
    }
  }  // namespace detail

  //! Letters 1, 2, 3, ... in in-order.
  [[nodiscard]] inline Bstm relabel(Btm const& t) {
    Letter next = 1;
    return detail::relabel(t, next);
  }

  //! The map B: shape of the P-symbol.
  [[nodiscard]] inline Btm btm_of_word(Word const& w) {
    return strip(p_symbol(w));
  }

  //! A packed word whose P-symbol is relabel(t): the reverse of the
  //! pre-order reading with each letter repeated by its multiplicity.
  [[nodiscard]] inline Word reading_word(Btm const& t) {
    std::vector<Letter> seq;
    relabel(t).for_each_prefix([&seq](Bstm const& n) {
      seq.insert(seq.end(), n.label().multiplicity, n.label().letter);
    });
    std::reverse(seq.begin(), seq.end());
    return Word(std::move(seq));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration and counting
  ////////////////////////////////////////////////////////////////////////

  //! All BTM of size n in increasing tree order.
  [[nodiscard]] inline std::vector<Btm> enumerate_btm(std::size_t n) {
    std::vector<std::vector<Btm>> by_size(n + 1);
    by_size[0] = {Btm()};
    for (std::size_t s = 1; s <= n; ++s) {
      for (std::size_t m = 1; m <= s; ++m) {
        for (std::size_t l = 0; l + m <= s; ++l) {
          for (auto const& left : by_size[l]) {
            for (auto const& right : by_size[s - m - l]) {
              by_size[s].emplace_back(static_cast<Multiplicity>(m), left, right);
            }
          }
        }
      }
    }
    return by_size[n];
  }

  //! |T|! / prod over subtrees t of |t| (m(t) - 1)!.
  [[nodiscard]] inline Integer hook_count(Btm const& t) {
    if (t.empty()) {
      throw Error(ErrorKind::undefined_on_empty,
                  "the hook length formula needs a non-empty tree");
    }
    Integer denominator = 1;
    t.for_each_prefix([&denominator](Btm const& s) {
      denominator *= s.size();
      denominator *= factorial(s.label() - 1);
    });
    Integer const numerator = factorial(t.size());
    if (numerator % denominator != 0) {
      throw Error(ErrorKind::internal_inconsistency,
                  "hook length quotient is not an integer");
    }
    return numerator / denominator;
  }

  inline constexpr std::size_t default_fiber_cap = 8;

  //! All packed words u with B(u) = t, by filtering every packed word of
  //! length |t|.
  [[nodiscard]] inline std::vector<Word>
  fiber(Btm const& t, std::size_t cap = default_fiber_cap) {
    if (t.size() > cap) {
      throw Error(ErrorKind::bound_exceeded,
                  "fiber of a tree of size " + std::to_string(t.size())
                      + " exceeds the cap " + std::to_string(cap));
    }
    std::vector<Word> out;
    for (auto const& w : enumerate_canonical(PhiMap::packing, t.size())) {
      if (btm_of_word(w) == t) {
        out.push_back(w);
      }
    }
    return out;
  }

  //! Every packed word of length n grouped by its BTM.
  [[nodiscard]] inline std::map<Btm, std::vector<Word>>
  fibers_of_size(std::size_t n, std::size_t cap = default_fiber_cap) {
    if (n > cap) {
      throw Error(ErrorKind::bound_exceeded,
                  "fibers of size " + std::to_string(n) + " exceed the cap "
                      + std::to_string(cap));
    }
    std::map<Btm, std::vector<Word>> out;
    for (auto const& w : enumerate_canonical(PhiMap::packing, n)) {
      out[btm_of_word(w)].push_back(w);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format: (m left right), "." for the empty tree; BSTM nodes are
  // written l:m, Q-symbol nodes [p1,p2,...].
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline std::string format_label(Multiplicity m) {
    return std::to_string(m);
  }

  [[nodiscard]] inline std::string format_label(LetterCount const& lc) {
    return std::to_string(lc.letter) + ":" + std::to_string(lc.multiplicity);
  }

  [[nodiscard]] inline std::string format_label(PositionSet const& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
      out += (i ? "," : "") + std::to_string(p[i]);
    }
    return out + "]";
  }

  template <typename Label>
  [[nodiscard]] std::string to_string(BinaryTree<Label> const& t) {
    if (t.empty()) {
      return ".";
    }
    return "(" + format_label(t.label()) + " " + to_string(t.left()) + " "
           + to_string(t.right()) + ")";
  }

  namespace detail {
    inline unsigned long parse_positive(std::string_view s, std::string_view ctx) {
      if (s.empty() || s.size() > 9
          || !std::all_of(s.begin(), s.end(), [](char c) {
               return std::isdigit(static_cast<unsigned char>(c));
             })) {
        throw Error(ErrorKind::parse_error,
                    "malformed tree literal '" + std::string(ctx) + "'");
      }
      auto v = std::stoul(std::string(s));
      if (v == 0) {
        throw Error(ErrorKind::parse_error,
                    "labels must be positive in '" + std::string(ctx) + "'");
      }
      return v;
    }

    template <typename Label, typename LabelParser>
    class TreeParser {
     public:
      TreeParser(std::string_view text, LabelParser parse_label)
          : _text(text), _parse_label(std::move(parse_label)) {}

      BinaryTree<Label> parse() {
        auto t = tree();
        skip_space();
        if (_pos != _text.size()) {
          fail();
        }
        return t;
      }

     private:
      BinaryTree<Label> tree() {
        skip_space();
        if (_pos >= _text.size()) {
          fail();
        }
        if (_text[_pos] == '.') {
          ++_pos;
          return {};
        }
        if (_text[_pos] != '(') {
          fail();
        }
        ++_pos;
        skip_space();
        auto const start = _pos;
        while (_pos < _text.size() && !std::isspace(static_cast<unsigned char>(_text[_pos]))
               && _text[_pos] != '(' && _text[_pos] != ')') {
          ++_pos;
        }
        Label label = _parse_label(_text.substr(start, _pos - start), _text);
        skip_space();
        BinaryTree<Label> left, right;
        if (_pos < _text.size() && _text[_pos] == ')') {
          // (m) abbreviates (m . .)
          ++_pos;
          return BinaryTree<Label>(std::move(label), {}, {});
        }
        left  = tree();
        right = tree();
        skip_space();
        if (_pos >= _text.size() || _text[_pos] != ')') {
          fail();
        }
        ++_pos;
        return BinaryTree<Label>(std::move(label), std::move(left), std::move(right));
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      [[noreturn]] void fail() const {
        throw Error(ErrorKind::parse_error,
                    "malformed tree literal '" + std::string(_text) + "'");
      }

      std::string_view _text;
      LabelParser      _parse_label;
      std::size_t      _pos = 0;
    };

    template <typename Label, typename LabelParser>
    BinaryTree<Label> parse_tree(std::string_view text, LabelParser p) {
      return TreeParser<Label, LabelParser>(text, std::move(p)).parse();
    }
  }  // namespace detail

  [[nodiscard]] inline Btm parse_btm(std::string_view text) {
    return detail::parse_tree<Multiplicity>(
        text, [](std::string_view s, std::string_view ctx) {
          return static_cast<Multiplicity>(detail::parse_positive(s, ctx));
        });
  }

  //! Also checks the binary search property and letter uniqueness.
  [[nodiscard]] inline Bstm parse_bstm(std::string_view text) {
    auto t = detail::parse_tree<LetterCount>(
        text, [](std::string_view s, std::string_view ctx) {
          auto const colon = s.find(':');
          if (colon == std::string_view::npos) {
            throw Error(ErrorKind::parse_error,
                        "BSTM nodes are written letter:multiplicity in '"
                            + std::string(ctx) + "'");
          }
          return LetterCount{
              static_cast<Letter>(detail::parse_positive(s.substr(0, colon), ctx)),
              static_cast<Multiplicity>(
                  detail::parse_positive(s.substr(colon + 1), ctx))};
        });
    std::vector<Letter> infix;
    t.for_each_infix([&infix](Bstm const& n) { infix.push_back(n.label().letter); });
    if (std::adjacent_find(infix.begin(), infix.end(), std::greater_equal<>())
        != infix.end()) {
      throw Error(ErrorKind::parse_error,
                  "not a binary search tree with distinct letters: '"
                      + std::string(text) + "'");
    }
    return t;
  }

  [[nodiscard]] inline QSymbol parse_qsymbol(std::string_view text) {
    return detail::parse_tree<PositionSet>(
        text, [](std::string_view s, std::string_view ctx) {
          if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
            throw Error(ErrorKind::parse_error,
                        "malformed position set in '" + std::string(ctx) + "'");
          }
          PositionSet out;
          auto        body  = s.substr(1, s.size() - 2);
          std::size_t start = 0;
          while (start <= body.size()) {
            auto const end = std::min(body.find(',', start), body.size());
            out.push_back(detail::parse_positive(body.substr(start, end - start), ctx));
            start = end + 1;
          }
          if (!std::is_sorted(out.begin(), out.end())) {
            std::sort(out.begin(), out.end());
          }
          return out;
        });
  }

}  // namespace hopfcomb
