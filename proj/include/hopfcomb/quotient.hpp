#pragma once

// Quotients of FQSym / WQSym by good congruences: the m-basis elements of a
// class are identified. PBTm is the taïga quotient of WQSym indexed by trees.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcomb/basis.hpp"
#include "hopfcomb/congruence.hpp"
#include "hopfcomb/error.hpp"
#include "hopfcomb/lincomb.hpp"
#include "hopfcomb/realization.hpp"
#include "hopfcomb/trees.hpp"

namespace hopfcomb {

  [[nodiscard]] inline ClassIndex class_index(CongruenceExpr const& c, Word const& w) {
    return ClassIndex{to_string(c), canonical_form(c, w)};
  }

  //! Replaces every word by its class.
  [[nodiscard]] inline LinComb<ClassIndex> project(CongruenceExpr const& c,
                                                   LinComb<Word> const&  x) {
    auto const name = to_string(c);
    return map_indices<ClassIndex>(
        x, [&](Word const& w) { return ClassIndex{name, canonical_form(c, w)}; });
  }

  [[nodiscard]] inline Tensor2<ClassIndex> project(CongruenceExpr const& c,
                                                   Tensor2<Word> const&  x) {
    auto const name = to_string(c);
    return map_indices<std::pair<ClassIndex, ClassIndex>>(
        x, [&](std::pair<Word, Word> const& p) {
          return std::pair{ClassIndex{name, canonical_form(c, p.first)},
                           ClassIndex{name, canonical_form(c, p.second)}};
        });
  }

  //! Taïga projection onto trees: a packed word goes to the shape of its
  //! P-symbol.
  [[nodiscard]] inline LinComb<BtmIndex> project_btm(LinComb<Word> const& x) {
    return map_indices<BtmIndex>(x, [](Word const& w) { return BtmIndex{btm_of_word(w)}; });
  }

  [[nodiscard]] inline Tensor2<BtmIndex> project_btm(Tensor2<Word> const& x) {
    return map_indices<std::pair<BtmIndex, BtmIndex>>(x, [](std::pair<Word, Word> const& p) {
      return std::pair{BtmIndex{btm_of_word(p.first)}, BtmIndex{btm_of_word(p.second)}};
    });
  }

  namespace detail {
    template <typename Key, typename Value>
    class Memo {
     public:
      template <typename F>
      Value const& get(Key const& k, F&& compute) {
        {
          std::lock_guard lock(_mutex);
          auto            it = _table.find(k);
          if (it != _table.end()) {
            return it->second;
          }
        }
        Value           v = compute();
        std::lock_guard lock(_mutex);
        return _table.try_emplace(k, std::move(v)).first->second;
      }

     private:
      std::mutex           _mutex;
      std::map<Key, Value> _table;
    };

    template <typename Index, typename Members, typename F>
    void verify_independent(Members const& left,
                            Members const& right,
                            F&&            compute,
                            char const*    what) {
      std::optional<Index> first;
      for (auto const& u : left) {
        for (auto const& v : right) {
          auto r = compute(u, v);
          if (!first) {
            first = std::move(r);
          } else if (r != *first) {
            throw Error(ErrorKind::not_well_defined,
                        std::string(what) + " depends on the representatives (witness "
                            + to_string(u) + ", " + to_string(v) + ")");
          }
        }
      }
    }
  }  // namespace detail

  //! The quotient of the Phi-algebra by the congruence c. The caller is
  //! responsible for c being Phi-good; with verification on, every product
  //! and coproduct is recomputed on all representatives and any dependence
  //! raises not_well_defined.
  template <PhiMap Phi>
  class QuotientAlgebra {
   public:
    using index_type = ClassIndex;

    static constexpr PhiMap phi = Phi;

    explicit QuotientAlgebra(CongruenceExpr c, bool verify = false)
        : _c(std::move(c)),
          _name(to_string(_c)),
          _verify(verify),
          _members(std::make_shared<detail::Memo<Word, std::vector<Word>>>()) {}

    [[nodiscard]] std::string name() const {
      return "Q(" + _name + ", " + std::string(to_string(Phi)) + ")";
    }

    [[nodiscard]] CongruenceExpr const& congruence() const noexcept {
      return _c;
    }

    [[nodiscard]] bool verifying() const noexcept {
      return _verify;
    }

    [[nodiscard]] ClassIndex unit() const {
      return ClassIndex{_name, Word{}};
    }

    [[nodiscard]] ClassIndex index_of(Word const& w) const {
      detail::require_canonical(Phi, w);
      return ClassIndex{_name, canonical_form(_c, w)};
    }

    [[nodiscard]] std::vector<ClassIndex> basis(std::size_t n) const {
      std::vector<ClassIndex> out;
      for (auto& cls : classes(_c, Phi, n)) {
        out.push_back(ClassIndex{_name, std::move(cls.representative)});
      }
      return out;
    }

    //! Canonical words of the class of a.
    [[nodiscard]] std::vector<Word> const& members(ClassIndex const& a) const {
      check(a);
      return _members->get(a.representative,
                           [&] { return class_of(_c, a.representative).members; });
    }

    [[nodiscard]] LinComb<ClassIndex> product(ClassIndex const& a, ClassIndex const& b) const {
      check(a);
      check(b);
      auto compute = [&](Word const& u, Word const& v) {
        return project(_c, m_product(Phi, u, v));
      };
      if (_verify) {
        detail::verify_independent<LinComb<ClassIndex>>(members(a), members(b), compute,
                                                        "product");
      }
      return compute(a.representative, b.representative);
    }

    [[nodiscard]] Tensor2<ClassIndex> coproduct(ClassIndex const& a) const {
      check(a);
      auto compute = [&](Word const& u, Word const&) { return project(_c, m_coproduct(Phi, u)); };
      if (_verify) {
        detail::verify_independent<Tensor2<ClassIndex>>(members(a), std::vector<Word>{Word{}},
                                                        compute, "coproduct");
      }
      return compute(a.representative, Word{});
    }

   private:
    void check(ClassIndex const& a) const {
      if (a.congruence != _name) {
        throw Error(ErrorKind::invalid_index,
                    "class of " + a.congruence + " used in the quotient by " + _name);
      }
    }

    CongruenceExpr                                          _c;
    std::string                                             _name;
    bool                                                    _verify;
    std::shared_ptr<detail::Memo<Word, std::vector<Word>>> _members;
  };

  using StalacticQuotient = QuotientAlgebra<PhiMap::packing>;

  [[nodiscard]] inline LinComb<ClassIndex> q_product(CongruenceExpr const& c,
                                                     PhiMap                phi,
                                                     ClassIndex const&     a,
                                                     ClassIndex const&     b,
                                                     bool                  verify = false) {
    if (phi == PhiMap::standardization) {
      return QuotientAlgebra<PhiMap::standardization>(c, verify).product(a, b);
    }
    return QuotientAlgebra<PhiMap::packing>(c, verify).product(a, b);
  }

  [[nodiscard]] inline Tensor2<ClassIndex> q_coproduct(CongruenceExpr const& c,
                                                       PhiMap                phi,
                                                       ClassIndex const&     a,
                                                       bool                  verify = false) {
    if (phi == PhiMap::standardization) {
      return QuotientAlgebra<PhiMap::standardization>(c, verify).coproduct(a);
    }
    return QuotientAlgebra<PhiMap::packing>(c, verify).coproduct(a);
  }

  //! PBTm: the taïga quotient of WQSym, basis Q^m_T indexed by trees with
  //! multiplicities. Products are computed on the reading word of each tree.
  class Pbtm {
   public:
    using index_type = BtmIndex;

    explicit Pbtm(bool verify = false, std::size_t fiber_cap = default_fiber_cap)
        : _verify(verify), _fiber_cap(fiber_cap) {}

    [[nodiscard]] std::string name() const {
      return "PBTm";
    }

    [[nodiscard]] bool verifying() const noexcept {
      return _verify;
    }

    [[nodiscard]] BtmIndex unit() const {
      return BtmIndex{Btm()};
    }

    [[nodiscard]] std::vector<BtmIndex> basis(std::size_t n) const {
      std::vector<BtmIndex> out;
      for (auto& t : enumerate_btm(n)) {
        out.push_back(BtmIndex{std::move(t)});
      }
      return out;
    }

    [[nodiscard]] LinComb<BtmIndex> product(BtmIndex const& a, BtmIndex const& b) const {
      auto compute = [](Word const& u, Word const& v) {
        return project_btm(m_product(PhiMap::packing, u, v));
      };
      if (_verify) {
        detail::verify_independent<LinComb<BtmIndex>>(fiber(a.tree, _fiber_cap),
                                                      fiber(b.tree, _fiber_cap), compute,
                                                      "product");
      }
      return compute(reading_word(a.tree), reading_word(b.tree));
    }

    [[nodiscard]] Tensor2<BtmIndex> coproduct(BtmIndex const& a) const {
      auto compute = [](Word const& u, Word const&) {
        return project_btm(m_coproduct(PhiMap::packing, u));
      };
      if (_verify) {
        detail::verify_independent<Tensor2<BtmIndex>>(
            fiber(a.tree, _fiber_cap), std::vector<Word>{Word{}}, compute, "coproduct");
      }
      return compute(reading_word(a.tree), Word{});
    }

   private:
    bool        _verify;
    std::size_t _fiber_cap;
  };

}  // namespace hopfcomb
