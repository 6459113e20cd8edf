#pragma once

// JSON encodings (nlohmann::json, found by argument-dependent lookup).

#include <cstdint>
#include <limits>
#include <string>
#include <utility>

#include <json.hpp>

#include "hopfcomb/axioms.hpp"
#include "hopfcomb/basis.hpp"
#include "hopfcomb/congruence.hpp"
#include "hopfcomb/series.hpp"
#include "hopfcomb/trees.hpp"
#include "hopfcomb/word.hpp"

// Boost number types live outside this namespace, so they get serializers
// instead of ADL overloads.
template <>
struct nlohmann::adl_serializer<hopfcomb::Integer> {
  //! Fits in 64 bits: a JSON number; otherwise its decimal string.
  static void to_json(nlohmann::json& j, hopfcomb::Integer const& n) {
    if (n >= std::numeric_limits<std::int64_t>::min()
        && n <= std::numeric_limits<std::int64_t>::max()) {
      j = static_cast<std::int64_t>(n);
    } else {
      j = n.str();
    }
  }
};

template <>
struct nlohmann::adl_serializer<hopfcomb::Rational> {
  static void to_json(nlohmann::json& j, hopfcomb::Rational const& r) {
    j = nlohmann::json::array({hopfcomb::Integer(numerator(r)), hopfcomb::Integer(denominator(r))});
  }
};

namespace hopfcomb {

  using json = nlohmann::json;

  inline void to_json(json& j, Word const& w) {
    j = w.letters();
  }

  inline void to_json(json& j, OrderedSetPartition const& p) {
    j = p.parts;
  }

  inline void to_json(json& j, TruncatedSeries const& s) {
    j = s.coefficients();
  }

  inline void to_json(json& j, Btm const& t) {
    if (t.empty()) {
      j = nullptr;
      return;
    }
    j = json{{"m", t.label()}, {"left", json(t.left())}, {"right", json(t.right())}};
  }

  inline void to_json(json& j, Bstm const& t) {
    if (t.empty()) {
      j = nullptr;
      return;
    }
    j = json{{"letter", t.label().letter},
             {"m", t.label().multiplicity},
             {"left", json(t.left())},
             {"right", json(t.right())}};
  }

  inline void to_json(json& j, QSymbol const& t) {
    if (t.empty()) {
      j = nullptr;
      return;
    }
    j = json{{"positions", t.label()}, {"left", json(t.left())}, {"right", json(t.right())}};
  }

  inline void to_json(json& j, PermutationIndex const& i) {
    j = json{{"family", "permutation"}, {"value", i.word}};
  }

  inline void to_json(json& j, PackedWordIndex const& i) {
    j = json{{"family", "packed_word"}, {"value", i.word}};
  }

  inline void to_json(json& j, ClassIndex const& i) {
    j = json{{"family", "class"},
             {"value", json{{"congruence", i.congruence}, {"representative", i.representative}}}};
  }

  inline void to_json(json& j, BtmIndex const& i) {
    j = json{{"family", "btm"}, {"value", i.tree}, {"text", to_string(i.tree)}};
  }

  template <typename Index>
  void to_json(json& j, Dual<Index> const& i) {
    j = json(i.index);
    j["family"] = "dual_" + j["family"].template get<std::string>();
  }

  template <typename A, typename B>
  void to_json(json& j, std::pair<A, B> const& p) {
    j = json{{"family", "tensor"}, {"value", json::array({json(p.first), json(p.second)})}};
  }

  template <typename Index>
  void to_json(json& j, LinComb<Index> const& x) {
    j = json::array();
    for (auto const& [i, c] : x) {
      j.push_back(json{{"coeff", c}, {"index", json(i)}});
    }
  }

  inline void to_json(json& j, EquivalenceClass const& c) {
    j = json{{"representative", c.representative}, {"members", c.members}};
  }

  inline void to_json(json& j, GoodnessReport const& r) {
    j = json{{"good", r.good()},
             {"phi_congruence_ok", r.phi_congruence_ok},
             {"interval_ok", r.interval_ok},
             {"max_length_checked", r.max_length_checked},
             {"counterexample", nullptr},
             {"failure", r.failure}};
    if (r.counterexample) {
      j["counterexample"] = json::array({r.counterexample->first, r.counterexample->second});
    }
  }

  inline void to_json(json& j, HopfReport const& r) {
    j = json{{"algebra", r.algebra},
             {"degree", r.degree},
             {"ok", r.ok()},
             {"associativity", r.associativity},
             {"coassociativity", r.coassociativity},
             {"unit", r.unit},
             {"counit", r.counit},
             {"compatibility", r.compatibility},
             {"checks", r.checks},
             {"violations", r.violations}};
  }

}  // namespace hopfcomb
