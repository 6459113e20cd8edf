#pragma once

// Rewrite congruences on words (sylvester, its Schützenberger mirror,
// stalactic, taïga), their lattice closure under union and intersection,
// class computation and bounded exhaustive checks of the good-monoid axioms.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hopfcomb/error.hpp"
#include "hopfcomb/trees.hpp"
#include "hopfcomb/word.hpp"

namespace hopfcomb {

  //! A closed term over the base congruences and the lattice operators.
  class CongruenceExpr {
   public:
    enum class Kind {
      sylvester,
      sylvester_sharp,
      stalactic,
      taiga,
      join,         // union: transitive closure of the union
      intersection  // meet
    };

    static CongruenceExpr sylvester() {
      return CongruenceExpr(Kind::sylvester);
    }
    static CongruenceExpr sylvester_sharp() {
      return CongruenceExpr(Kind::sylvester_sharp);
    }
    static CongruenceExpr stalactic() {
      return CongruenceExpr(Kind::stalactic);
    }
    static CongruenceExpr taiga() {
      return CongruenceExpr(Kind::taiga);
    }
    static CongruenceExpr join(CongruenceExpr a, CongruenceExpr b) {
      return CongruenceExpr(Kind::join, std::move(a), std::move(b));
    }
    static CongruenceExpr meet(CongruenceExpr a, CongruenceExpr b) {
      return CongruenceExpr(Kind::intersection, std::move(a), std::move(b));
    }

    [[nodiscard]] Kind kind() const noexcept {
      return _kind;
    }

    [[nodiscard]] bool is_base() const noexcept {
      return _children == nullptr;
    }

    [[nodiscard]] CongruenceExpr const& left() const {
      return _children->first;
    }

    [[nodiscard]] CongruenceExpr const& right() const {
      return _children->second;
    }

    //! True if an intersection node occurs anywhere in the term.
    [[nodiscard]] bool has_intersection() const {
      if (is_base()) {
        return false;
      }
      return _kind == Kind::intersection || left().has_intersection()
             || right().has_intersection();
    }

    friend bool operator==(CongruenceExpr const& a, CongruenceExpr const& b) {
      if (a._kind != b._kind) {
        return false;
      }
      return a.is_base() || (a.left() == b.left() && a.right() == b.right());
    }

   private:
    explicit CongruenceExpr(Kind k) : _kind(k) {}

    CongruenceExpr(Kind k, CongruenceExpr a, CongruenceExpr b)
        : _kind(k),
          _children(std::make_shared<std::pair<CongruenceExpr, CongruenceExpr> const>(
              std::move(a), std::move(b))) {}

    Kind                                                           _kind;
    std::shared_ptr<std::pair<CongruenceExpr, CongruenceExpr> const> _children;
  };

  [[nodiscard]] inline std::string to_string(CongruenceExpr const& c) {
    using K = CongruenceExpr::Kind;
    switch (c.kind()) {
      case K::sylvester: return "sylv";
      case K::sylvester_sharp: return "sylv#";
      case K::stalactic: return "stal";
      case K::taiga: return "taiga";
      case K::join:
        return "union(" + to_string(c.left()) + "," + to_string(c.right()) + ")";
      case K::intersection:
        return "inter(" + to_string(c.left()) + "," + to_string(c.right()) + ")";
    }
    return "?";
  }

  //! Grammar: sylv | sylv# | stal | taiga | union(e,e) | inter(e,e);
  //! whitespace is ignored.
  [[nodiscard]] inline CongruenceExpr parse_congruence(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        s += c;
      }
    }
    std::size_t pos  = 0;
    auto        fail = [&]() -> CongruenceExpr {
      throw Error(ErrorKind::parse_error,
                  "unknown congruence expression '" + std::string(text) + "'");
    };
    auto eat = [&](std::string_view tok) {
      if (s.compare(pos, tok.size(), tok) == 0) {
        pos += tok.size();
        return true;
      }
      return false;
    };
    auto expr = [&](auto& self) -> CongruenceExpr {
      for (auto [name, op] : {std::pair{"union(", 0}, std::pair{"inter(", 1}}) {
        if (eat(name)) {
          auto a = self(self);
          if (!eat(",")) {
            return fail();
          }
          auto b = self(self);
          if (!eat(")")) {
            return fail();
          }
          return op == 0 ? CongruenceExpr::join(std::move(a), std::move(b))
                         : CongruenceExpr::meet(std::move(a), std::move(b));
        }
      }
      if (eat("sylv#")) {
        return CongruenceExpr::sylvester_sharp();
      }
      if (eat("sylv")) {
        return CongruenceExpr::sylvester();
      }
      if (eat("stal")) {
        return CongruenceExpr::stalactic();
      }
      if (eat("taiga")) {
        return CongruenceExpr::taiga();
      }
      return fail();
    };
    auto result = expr(expr);
    if (pos != s.size()) {
      fail();
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewrite rules
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    // Adjacent transposition at (i, i+1) allowed by a base rule. Both
    // directions of each rule share one condition, so the relation is
    // symmetric.
    inline bool sylvester_swap(Word const& w, std::size_t i) {
      Letter const a = std::min(w[i], w[i + 1]);
      Letter const c = std::max(w[i], w[i + 1]);
      if (a == c) {
        return false;
      }
      // u.ac.v.b.w with a <= b < c
      for (std::size_t j = i + 2; j < w.size(); ++j) {
        if (a <= w[j] && w[j] < c) {
          return true;
        }
      }
      return false;
    }

    inline bool sylvester_sharp_swap(Word const& w, std::size_t i) {
      Letter const a = std::min(w[i], w[i + 1]);
      Letter const c = std::max(w[i], w[i + 1]);
      if (a == c) {
        return false;
      }
      // u.b.v.ac.w with a < b <= c
      for (std::size_t j = 0; j < i; ++j) {
        if (a < w[j] && w[j] <= c) {
          return true;
        }
      }
      return false;
    }

    inline bool stalactic_swap(Word const& w, std::size_t i) {
      if (w[i] == w[i + 1]) {
        return false;
      }
      // u.ba.v.b.w: one of the two letters occurs again later
      for (std::size_t j = i + 2; j < w.size(); ++j) {
        if (w[j] == w[i] || w[j] == w[i + 1]) {
          return true;
        }
      }
      return false;
    }

    inline bool base_swap(CongruenceExpr::Kind k, Word const& w, std::size_t i) {
      using K = CongruenceExpr::Kind;
      switch (k) {
        case K::sylvester: return sylvester_swap(w, i);
        case K::sylvester_sharp: return sylvester_sharp_swap(w, i);
        case K::stalactic: return stalactic_swap(w, i);
        case K::taiga: return sylvester_swap(w, i) || stalactic_swap(w, i);
        default: return false;
      }
    }

    inline bool any_swap(CongruenceExpr const& c, Word const& w, std::size_t i) {
      if (c.is_base()) {
        return base_swap(c.kind(), w, i);
      }
      return any_swap(c.left(), w, i) || any_swap(c.right(), w, i);
    }

    inline Word swapped(Word const& w, std::size_t i) {
      std::vector<Letter> v = w.letters();
      std::swap(v[i], v[i + 1]);
      return Word(std::move(v));
    }
  }  // namespace detail

  //! Words reachable from w by one rule application. Undefined on terms
  //! containing an intersection.
  [[nodiscard]] inline std::vector<Word> neighbors(CongruenceExpr const& c,
                                                   Word const&           w) {
    if (c.has_intersection()) {
      throw Error(ErrorKind::unsupported_operation,
                  "neighbors is undefined for intersections; use class_of");
    }
    std::vector<Word> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (detail::any_swap(c, w, i)) {
        out.push_back(detail::swapped(w, i));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partitions of a closed universe of words
  ////////////////////////////////////////////////////////////////////////

  //! A set of words together with an index. Class computations require the
  //! universe to be a union of whole congruence classes.
  class WordUniverse {
   public:
    explicit WordUniverse(std::vector<Word> words) : _words(std::move(words)) {
      _index.reserve(_words.size());
      for (std::size_t i = 0; i < _words.size(); ++i) {
        _index.emplace(_words[i], i);
      }
    }

    [[nodiscard]] std::vector<Word> const& words() const noexcept {
      return _words;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _words.size();
    }

    [[nodiscard]] std::optional<std::size_t> find(Word const& w) const {
      auto it = _index.find(w);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] std::size_t at(Word const& w) const {
      auto i = find(w);
      if (!i) {
        throw Error(ErrorKind::internal_inconsistency,
                    "word " + to_string(w) + " escapes the universe");
      }
      return *i;
    }

   private:
    std::vector<Word>                       _words;
    std::unordered_map<Word, std::size_t> _index;
  };

  namespace detail {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }

      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };

    // Relabels block ids so each block is named by its first member.
    template <typename Key>
    std::vector<std::size_t> normalize_blocks(std::vector<Key> const& keys) {
      std::map<Key, std::size_t> first;
      std::vector<std::size_t>   out(keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i) {
        out[i] = first.try_emplace(keys[i], i).first->second;
      }
      return out;
    }
  }  // namespace detail

  //! Block id of every word of the universe; a block is named by the index
  //! of its first word.
  [[nodiscard]] inline std::vector<std::size_t>
  partition(CongruenceExpr const& c, WordUniverse const& universe) {
    using K = CongruenceExpr::Kind;
    if (c.kind() == K::intersection) {
      auto const a = partition(c.left(), universe);
      auto const b = partition(c.right(), universe);
      std::vector<std::pair<std::size_t, std::size_t>> keys(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        keys[i] = {a[i], b[i]};
      }
      return detail::normalize_blocks(keys);
    }
    detail::UnionFind uf(universe.size());
    if (c.kind() == K::join) {
      for (auto const* side : {&c.left(), &c.right()}) {
        auto const p = partition(*side, universe);
        for (std::size_t i = 0; i < p.size(); ++i) {
          uf.unite(i, p[i]);
        }
      }
    } else {
      auto const& words = universe.words();
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t k = 0; k + 1 < words[i].size(); ++k) {
          if (detail::base_swap(c.kind(), words[i], k)) {
            uf.unite(i, universe.at(detail::swapped(words[i], k)));
          }
        }
      }
    }
    std::vector<std::size_t> roots(universe.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      roots[i] = uf.find(i);
    }
    return detail::normalize_blocks(roots);
  }

  ////////////////////////////////////////////////////////////////////////
  // Classes
  ////////////////////////////////////////////////////////////////////////

  struct EquivalenceClass {
    std::vector<Word> members;  // sorted
    Word              representative;

    friend bool operator==(EquivalenceClass const&, EquivalenceClass const&)
        = default;
  };

  inline constexpr std::size_t default_class_length_cap = 9;

  //! All distinct rearrangements of w, sorted.
  [[nodiscard]] inline std::vector<Word> anagrams(Word const& w) {
    std::vector<Letter> v = w.letters();
    std::sort(v.begin(), v.end());
    std::vector<Word> out;
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  //! Breadth-first closure under neighbors for terms without intersection;
  //! otherwise the block of w in the partition of its anagrams.
  [[nodiscard]] inline EquivalenceClass
  class_of(CongruenceExpr const& c,
           Word const&           w,
           std::size_t           length_cap = default_class_length_cap) {
    if (w.size() > length_cap) {
      throw Error(ErrorKind::bound_exceeded,
                  "class enumeration of a word of length "
                      + std::to_string(w.size()) + " exceeds the cap "
                      + std::to_string(length_cap));
    }
    std::vector<Word> members;
    if (!c.has_intersection()) {
      std::unordered_set<Word> seen{w};
      std::queue<Word>         todo;
      todo.push(w);
      while (!todo.empty()) {
        Word const u = std::move(todo.front());
        todo.pop();
        for (auto& v : neighbors(c, u)) {
          if (seen.insert(v).second) {
            todo.push(std::move(v));
          }
        }
      }
      members.assign(seen.begin(), seen.end());
    } else {
      WordUniverse const universe(anagrams(w));
      auto const         blocks = partition(c, universe);
      auto const         target = blocks[universe.at(w)];
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i] == target) {
          members.push_back(universe.words()[i]);
        }
      }
    }
    std::sort(members.begin(), members.end());
    Word rep = members.front();
    return {std::move(members), std::move(rep)};
  }

  namespace detail {
    // Position of the last occurrence of each letter.
    inline std::map<Letter, std::size_t> last_occurrences(Word const& w) {
      std::map<Letter, std::size_t> last;
      for (std::size_t i = 0; i < w.size(); ++i) {
        last[w[i]] = i;
      }
      return last;
    }

    // Letters ordered by last occurrence. Stalactic classes are the words
    // with a given evaluation and this order.
    inline std::vector<Letter> last_occurrence_order(Word const& w) {
      std::vector<std::pair<std::size_t, Letter>> v;
      for (auto [l, i] : last_occurrences(w)) {
        v.emplace_back(i, l);
      }
      std::sort(v.begin(), v.end());
      std::vector<Letter> out;
      for (auto [i, l] : v) {
        out.push_back(l);
      }
      return out;
    }

    // Lexicographically least word with evaluation ev in which the last copy
    // of each letter comes after the last copies of all letters in
    // `before[letter]`. Placing the smallest admissible letter first is
    // optimal because an admissible prefix can always be completed.
    inline Word least_word_with_last_order(
        Evaluation                                   ev,
        std::map<Letter, std::vector<Letter>> const& before) {
      std::size_t n = 0;
      for (auto [l, k] : ev) {
        n += k;
      }
      std::vector<Letter> out;
      out.reserve(n);
      while (out.size() < n) {
        for (auto& [l, k] : ev) {
          if (k == 0) {
            continue;
          }
          bool ok = true;
          if (k == 1) {
            auto it = before.find(l);
            if (it != before.end()) {
              for (Letter d : it->second) {
                if (ev.at(d) != 0) {
                  ok = false;
                  break;
                }
              }
            }
          }
          if (ok) {
            out.push_back(l);
            --k;
            break;
          }
        }
      }
      return Word(std::move(out));
    }

    inline void collect_descendants(Bstm const&                           t,
                                    std::map<Letter, std::vector<Letter>>& out) {
      if (t.empty()) {
        return;
      }
      auto& mine = out[t.label().letter];
      t.left().for_each_prefix([&](Bstm const& n) { mine.push_back(n.label().letter); });
      t.right().for_each_prefix([&](Bstm const& n) { mine.push_back(n.label().letter); });
      collect_descendants(t.left(), out);
      collect_descendants(t.right(), out);
    }
  }  // namespace detail

  //! The word a_1^{m_1} ... a_k^{m_k} of the stalactic class of w, letters in
  //! last-occurrence order.
  [[nodiscard]] inline Word stalactic_block_form(Word const& w) {
    auto const          ev = evaluation(w);
    std::vector<Letter> out;
    for (Letter l : detail::last_occurrence_order(w)) {
      out.insert(out.end(), ev.at(l), l);
    }
    return Word(std::move(out));
  }

  [[nodiscard]] inline bool are_equivalent(CongruenceExpr const& c,
                                           Word const&           u,
                                           Word const&           v) {
    if (u.size() != v.size() || evaluation(u) != evaluation(v)) {
      return false;
    }
    if (u == v) {
      return true;
    }
    switch (c.kind()) {
      case CongruenceExpr::Kind::taiga: return p_symbol(u) == p_symbol(v);
      case CongruenceExpr::Kind::stalactic:
        return detail::last_occurrence_order(u) == detail::last_occurrence_order(v);
      default: break;
    }
    auto const cls = class_of(c, u);
    return std::binary_search(cls.members.begin(), cls.members.end(), v);
  }

  //! Lexicographically least member of the class of w. Taïga and stalactic
  //! classes are handled without enumerating them.
  [[nodiscard]] inline Word canonical_form(CongruenceExpr const& c, Word const& w) {
    switch (c.kind()) {
      case CongruenceExpr::Kind::taiga: {
        std::map<Letter, std::vector<Letter>> before;
        detail::collect_descendants(p_symbol(w), before);
        return detail::least_word_with_last_order(evaluation(w), before);
      }
      case CongruenceExpr::Kind::stalactic: {
        std::map<Letter, std::vector<Letter>> before;
        auto const order = detail::last_occurrence_order(w);
        for (std::size_t i = 0; i < order.size(); ++i) {
          before[order[i]].assign(order.begin(), order.begin() + i);
        }
        return detail::least_word_with_last_order(evaluation(w), before);
      }
      default: return class_of(c, w).representative;
    }
  }

  //! The canonical words of length n split into classes, sorted by
  //! representative.
  [[nodiscard]] inline std::vector<EquivalenceClass>
  classes(CongruenceExpr const& c, PhiMap phi, std::size_t n) {
    WordUniverse const universe(enumerate_canonical(phi, n));
    auto const         blocks = partition(c, universe);
    std::map<std::size_t, std::vector<Word>> grouped;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      grouped[blocks[i]].push_back(universe.words()[i]);
    }
    std::vector<EquivalenceClass> out;
    for (auto& [id, members] : grouped) {
      Word rep = members.front();  // universe is sorted
      out.push_back({std::move(members), std::move(rep)});
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.representative < b.representative;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Good-monoid certification
  ////////////////////////////////////////////////////////////////////////

  struct GoodnessReport {
    bool                                 phi_congruence_ok  = true;
    bool                                 interval_ok        = true;
    std::size_t                          max_length_checked = 0;
    std::optional<std::pair<Word, Word>> counterexample;
    std::string                          failure;  // which law failed

    [[nodiscard]] bool good() const noexcept {
      return phi_congruence_ok && interval_ok;
    }
  };

  inline constexpr std::size_t default_exhaustive_maxlen = 6;

  namespace detail {
    struct CheckUniverse {
      explicit CheckUniverse(CongruenceExpr const& c, std::size_t maxlen)
          : universe(all_words_up_to(maxlen)), blocks(partition(c, universe)) {}

      [[nodiscard]] bool equivalent(Word const& u, Word const& v) const {
        return blocks[universe.at(u)] == blocks[universe.at(v)];
      }

      WordUniverse             universe;
      std::vector<std::size_t> blocks;
    };

    inline void check_phi_congruence(CheckUniverse const& cu,
                                     PhiMap               phi,
                                     GoodnessReport&      report) {
      auto const& words = cu.universe.words();
      // (length, evaluation) groups; inside one group the partition by class
      // must coincide with the partition by class of phi.
      std::map<Evaluation, std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < words.size(); ++i) {
        groups[evaluation(words[i])].push_back(i);
      }
      std::optional<std::pair<std::size_t, std::size_t>> witness;
      std::string                                       law;
      auto consider = [&](std::size_t a, std::size_t b, char const* what) {
        std::pair<std::size_t, std::size_t> const pair{std::min(a, b), std::max(a, b)};
        if (!witness || pair < *witness) {
          witness = pair;
          law     = what;
        }
      };
      for (auto const& [ev, members] : groups) {
        std::map<std::size_t, std::size_t> class_to_phi, phi_to_class;
        std::map<std::size_t, std::size_t> class_witness, phi_witness;
        for (std::size_t i : members) {
          auto const cls  = cu.blocks[i];
          auto const pcls = cu.blocks[cu.universe.at(apply_phi(phi, words[i]))];
          auto [it, fresh] = class_to_phi.try_emplace(cls, pcls);
          class_witness.try_emplace(cls, i);
          if (!fresh && it->second != pcls) {
            consider(class_witness[cls], i, "u ~ v but phi(u) !~ phi(v)");
          }
          auto [jt, fresh2] = phi_to_class.try_emplace(pcls, cls);
          phi_witness.try_emplace(pcls, i);
          if (!fresh2 && jt->second != cls) {
            consider(phi_witness[pcls], i,
                     "phi(u) ~ phi(v) and ev(u) = ev(v) but u !~ v");
          }
        }
      }
      if (witness) {
        report.phi_congruence_ok = false;
        if (!report.counterexample) {
          report.counterexample = {words[witness->first], words[witness->second]};
          report.failure        = law;
        }
      }
    }

    inline void check_interval_compat(CheckUniverse const& cu,
                                      std::size_t          maxlen,
                                      GoodnessReport&      report) {
      auto const& words = cu.universe.words();
      // Comparing every word with the first word of its block covers all
      // pairs by transitivity.
      for (std::size_t i = 0; i < words.size(); ++i) {
        auto const& rep = words[cu.blocks[i]];
        if (cu.blocks[i] == i) {
          continue;
        }
        for (Letter lo = 1; lo <= maxlen; ++lo) {
          for (Letter hi = lo; hi <= maxlen; ++hi) {
            if (!cu.equivalent(restrict(words[i], lo, hi), restrict(rep, lo, hi))) {
              report.interval_ok = false;
              if (!report.counterexample) {
                report.counterexample = {rep, words[i]};
                report.failure        = "restriction to [" + std::to_string(lo)
                                 + "," + std::to_string(hi)
                                 + "] breaks the equivalence";
              }
              return;
            }
          }
        }
      }
    }
  }  // namespace detail

  //! Exhaustively tests u ~ v <=> (phi(u) ~ phi(v) and ev(u) = ev(v)) on
  //! words of length <= maxlen over {1..maxlen}.
  [[nodiscard]] inline GoodnessReport
  check_phi_congruence(CongruenceExpr const& c, PhiMap phi, std::size_t maxlen) {
    GoodnessReport report;
    report.max_length_checked = maxlen;
    detail::check_phi_congruence(detail::CheckUniverse(c, maxlen), phi, report);
    return report;
  }

  //! Exhaustively tests u ~ v => u|I ~ v|I for every interval I of
  //! {1..maxlen}.
  [[nodiscard]] inline GoodnessReport
  check_interval_compat(CongruenceExpr const& c, std::size_t maxlen) {
    GoodnessReport report;
    report.max_length_checked = maxlen;
    detail::check_interval_compat(detail::CheckUniverse(c, maxlen), maxlen, report);
    return report;
  }

  [[nodiscard]] inline GoodnessReport
  check_good(CongruenceExpr const& c, PhiMap phi, std::size_t maxlen) {
    GoodnessReport report;
    report.max_length_checked = maxlen;
    detail::CheckUniverse const cu(c, maxlen);
    detail::check_phi_congruence(cu, phi, report);
    detail::check_interval_compat(cu, maxlen, report);
    return report;
  }

}  // namespace hopfcomb
