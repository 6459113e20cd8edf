#pragma once

// Words over the positive integers and the maps between them: the ordered
// set partition of positions, standardization, packing, restriction to an
// alphabet interval and evaluation.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcomb/error.hpp"

namespace hopfcomb {

  //! Letters are positive integers; 0 is never a letter.
  using Letter = std::uint32_t;

  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;

    Word(std::initializer_list<Letter> letters) : _letters(letters) {
      validate();
    }

    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {
      validate();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }

    [[nodiscard]] Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }

    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }

    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }

    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    //! 0 for the empty word.
    [[nodiscard]] Letter max_letter() const noexcept {
      return _letters.empty()
                 ? 0
                 : *std::max_element(_letters.begin(), _letters.end());
    }

    void push_back(Letter l) {
      if (l == 0) {
        throw Error(ErrorKind::invalid_argument, "letters must be positive");
      }
      _letters.push_back(l);
    }

    friend bool operator==(Word const&, Word const&)  = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    void validate() const {
      if (std::find(_letters.begin(), _letters.end(), Letter(0))
          != _letters.end()) {
        throw Error(ErrorKind::invalid_argument, "letters must be positive");
      }
    }

    std::vector<Letter> _letters;
  };

  [[nodiscard]] inline Word concat(Word const& u, Word const& v) {
    std::vector<Letter> out(u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return Word(std::move(out));
  }

  [[nodiscard]] inline Word reversed(Word const& w) {
    return Word(std::vector<Letter>(w.letters().rbegin(), w.letters().rend()));
  }

  //! Digit string when every letter is at most 9, comma separated otherwise.
  //! The result always parses back with parse_word.
  [[nodiscard]] inline std::string to_string(Word const& w) {
    bool const digits = w.max_letter() <= 9;
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!digits && i > 0) {
        out += ',';
      }
      out += std::to_string(w[i]);
    }
    if (!digits && w.size() == 1) {
      out += ',';  // "14," is the one-letter word, "14" would be 1 then 4
    }
    return out;
  }

  inline std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << (w.empty() ? std::string("()") : to_string(w));
  }

  //! Accepts "45142234212", "7,2,14,3,7", "[7, 2, 14]", "14," and "" / "()"
  //! for the empty word.
  [[nodiscard]] inline Word parse_word(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (c != ' ' && c != '\t' && c != '[' && c != ']' && c != '(' && c != ')') {
        s += c;
      }
    }
    if (s.empty() || s == "ε") {
      return Word();
    }
    std::vector<Letter> letters;
    if (s.find(',') == std::string::npos) {
      for (char c : s) {
        if (c < '1' || c > '9') {
          throw Error(ErrorKind::parse_error,
                      "malformed word literal '" + std::string(text) + "'");
        }
        letters.push_back(static_cast<Letter>(c - '0'));
      }
      return Word(std::move(letters));
    }
    std::size_t start = 0;
    while (start <= s.size()) {
      auto const end   = std::min(s.find(',', start), s.size());
      auto const token = s.substr(start, end - start);
      if (token.empty()) {
        if (end == s.size() && !letters.empty()) {
          break;  // trailing comma
        }
        throw Error(ErrorKind::parse_error,
                    "malformed word literal '" + std::string(text) + "'");
      }
      if (!std::all_of(token.begin(), token.end(), [](char c) {
            return c >= '0' && c <= '9';
          })
          || token.size() > 9) {
        throw Error(ErrorKind::parse_error,
                    "malformed word literal '" + std::string(text) + "'");
      }
      auto const value = std::stoul(token);
      if (value == 0) {
        throw Error(ErrorKind::parse_error, "letters must be positive");
      }
      letters.push_back(static_cast<Letter>(value));
      start = end + 1;
    }
    return Word(std::move(letters));
  }

  ////////////////////////////////////////////////////////////////////////
  // Ordered set partitions and evaluations
  ////////////////////////////////////////////////////////////////////////

  //! Parts hold 1-indexed positions, sorted, ordered by the letter they carry.
  struct OrderedSetPartition {
    std::vector<std::vector<std::size_t>> parts;

    friend bool operator==(OrderedSetPartition const&,
                           OrderedSetPartition const&)
        = default;
  };

  [[nodiscard]] inline OrderedSetPartition part(Word const& w) {
    std::map<Letter, std::vector<std::size_t>> by_letter;
    for (std::size_t i = 0; i < w.size(); ++i) {
      by_letter[w[i]].push_back(i + 1);
    }
    OrderedSetPartition osp;
    osp.parts.reserve(by_letter.size());
    for (auto& [letter, positions] : by_letter) {
      osp.parts.push_back(std::move(positions));
    }
    return osp;
  }

  using Evaluation = std::map<Letter, std::size_t>;

  [[nodiscard]] inline Evaluation evaluation(Word const& w) {
    Evaluation ev;
    for (Letter l : w) {
      ++ev[l];
    }
    return ev;
  }

  //! Positions inside a part are numbered left to right.
  [[nodiscard]] inline Word standardize(Word const& w) {
    std::vector<Letter> out(w.size());
    Letter              next = 1;
    for (auto const& p : part(w).parts) {
      for (std::size_t pos : p) {
        out[pos - 1] = next++;
      }
    }
    return Word(std::move(out));
  }

  [[nodiscard]] inline Word pack(Word const& w) {
    std::vector<Letter> out(w.size());
    Letter              next = 1;
    for (auto const& p : part(w).parts) {
      for (std::size_t pos : p) {
        out[pos - 1] = next;
      }
      ++next;
    }
    return Word(std::move(out));
  }

  //! The subword of letters in [lo, hi], order preserved.
  [[nodiscard]] inline Word restrict(Word const& w, Letter lo, Letter hi) {
    if (lo > hi) {
      throw Error(ErrorKind::invalid_interval,
                  "restriction to [" + std::to_string(lo) + ","
                      + std::to_string(hi) + "]");
    }
    std::vector<Letter> out;
    for (Letter l : w) {
      if (lo <= l && l <= hi) {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  //! Subtracts `shift` from every letter; all letters must exceed it.
  [[nodiscard]] inline Word shift_down(Word const& w, Letter shift) {
    std::vector<Letter> out(w.begin(), w.end());
    for (Letter& l : out) {
      l -= shift;
    }
    return Word(std::move(out));
  }

  [[nodiscard]] inline Word shift_up(Word const& w, Letter shift) {
    std::vector<Letter> out(w.begin(), w.end());
    for (Letter& l : out) {
      l += shift;
    }
    return Word(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // phi-maps
  ////////////////////////////////////////////////////////////////////////

  enum class PhiMap { standardization, packing };

  [[nodiscard]] constexpr std::string_view to_string(PhiMap phi) noexcept {
    return phi == PhiMap::standardization ? "std" : "pack";
  }

  [[nodiscard]] inline PhiMap parse_phi(std::string_view name) {
    if (name == "std") {
      return PhiMap::standardization;
    }
    if (name == "pack" || name == "tass") {
      return PhiMap::packing;
    }
    throw Error(ErrorKind::parse_error,
                "unknown phi-map '" + std::string(name) + "'");
  }

  [[nodiscard]] inline Word apply_phi(PhiMap phi, Word const& w) {
    return phi == PhiMap::standardization ? standardize(w) : pack(w);
  }

  [[nodiscard]] inline bool is_canonical(PhiMap phi, Word const& w) {
    return apply_phi(phi, w) == w;
  }

  namespace detail {
    // Restricted growth strings of length n: every set partition of {1..n}
    // once, blocks numbered by first occurrence.
    inline void set_partitions(std::size_t                      n,
                               std::vector<Letter>&             current,
                               Letter                           blocks,
                               std::vector<std::vector<Letter>>& out) {
      if (current.size() == n) {
        out.push_back(current);
        return;
      }
      for (Letter b = 1; b <= blocks + 1; ++b) {
        current.push_back(b);
        set_partitions(n, current, std::max(blocks, b), out);
        current.pop_back();
      }
    }
  }  // namespace detail

  //! All canonical words of length n, sorted lexicographically.
  [[nodiscard]] inline std::vector<Word> enumerate_canonical(PhiMap      phi,
                                                             std::size_t n) {
    std::vector<Word> out;
    if (phi == PhiMap::standardization) {
      std::vector<Letter> perm(n);
      for (std::size_t i = 0; i < n; ++i) {
        perm[i] = static_cast<Letter>(i + 1);
      }
      do {
        out.emplace_back(perm);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return out;
    }
    // Packed words are surjections onto {1..k}: a set partition of the
    // positions together with an ordering of its blocks.
    std::vector<std::vector<Letter>> rgs;
    std::vector<Letter>              current;
    detail::set_partitions(n, current, 0, rgs);
    for (auto const& s : rgs) {
      Letter const        k = s.empty() ? 0 : *std::max_element(s.begin(), s.end());
      std::vector<Letter> sigma(k);
      for (Letter i = 0; i < k; ++i) {
        sigma[i] = i + 1;
      }
      do {
        std::vector<Letter> w(n);
        for (std::size_t i = 0; i < n; ++i) {
          w[i] = sigma[s[i] - 1];
        }
        out.emplace_back(std::move(w));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  //! Calls f on every word of the given length over {1..alphabet}, in
  //! lexicographic order.
  template <typename F>
  void for_each_word(Letter alphabet, std::size_t length, F&& f) {
    if (alphabet == 0 && length > 0) {
      return;
    }
    std::vector<Letter> w(length, 1);
    while (true) {
      f(Word(w));
      std::size_t i = length;
      while (i > 0 && w[i - 1] == alphabet) {
        w[i - 1] = 1;
        --i;
      }
      if (i == 0) {
        return;
      }
      ++w[i - 1];
    }
  }

  //! Words of length 0..maxlen over {1..maxlen}, shortest first, then
  //! lexicographic.
  [[nodiscard]] inline std::vector<Word> all_words_up_to(std::size_t maxlen) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= maxlen; ++len) {
      for_each_word(static_cast<Letter>(maxlen), len,
                    [&out](Word const& w) { out.push_back(w); });
    }
    return out;
  }

  struct RefinementReport {
    bool                holds = true;
    std::optional<Word> counterexample;
  };

  //! Checks phi(pi(u)) = phi(u) on every word of length <= maxlen over
  //! {1..maxlen}; reports the first failure.
  [[nodiscard]] inline RefinementReport
  check_refinement(PhiMap phi, PhiMap pi, std::size_t maxlen) {
    for (auto const& u : all_words_up_to(maxlen)) {
      if (apply_phi(phi, apply_phi(pi, u)) != apply_phi(phi, u)) {
        return {false, u};
      }
    }
    return {};
  }

}  // namespace hopfcomb

template <>
struct std::hash<hopfcomb::Word> {
  std::size_t operator()(hopfcomb::Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto l : w) {
      h ^= l;
      h *= 0x100000001b3ULL;
    }
    return h ^ w.size();
  }
};
