#include <set>

#include "catch_amalgamated.hpp"

#include "hopfcomb/quotient.hpp"

using namespace hopfcomb;

namespace {
  using C = CongruenceExpr;

  LinComb<Word> sum_of(std::initializer_list<char const*> lits) {
    LinComb<Word> out;
    for (auto const* s : lits) {
      out.add(parse_word(s), 1);
    }
    return out;
  }

  LinComb<BtmIndex> trees(std::initializer_list<char const*> lits) {
    LinComb<BtmIndex> out;
    for (auto const* s : lits) {
      out.add(BtmIndex{parse_btm(s)}, 1);
    }
    return out;
  }

  BtmIndex tree(char const* s) {
    return BtmIndex{parse_btm(s)};
  }

  // Recomputes every product and coproduct of degree <= n with verification on.
  template <typename Algebra>
  void sweep(Algebra const& alg, std::size_t n) {
    for (std::size_t a = 0; a <= n; ++a) {
      for (auto const& x : alg.basis(a)) {
        CHECK_NOTHROW(alg.coproduct(x));
        for (std::size_t b = 0; a + b <= n; ++b) {
          for (auto const& y : alg.basis(b)) {
            CHECK_NOTHROW(alg.product(x, y));
          }
        }
      }
    }
  }
}  // namespace

TEST_CASE("projections", "[quotient]") {
  auto const stal = project(C::stalactic(), sum_of({"11211", "11222", "11233", "11322", "22311"}));
  CHECK(stal.size() == 5);
  for (auto const& [i, c] : stal) {
    CHECK(c == 1);
    CHECK(i.congruence == "stal");
  }
  auto const pbt = project_btm(
      sum_of({"13121", "13122", "13123", "13124", "14123", "14132", "24231"}));
  CHECK(pbt.size() == 7);
  CHECK(project(C::taiga(), LinComb<Word>()).empty());
  CHECK(project_btm(LinComb<Word>()).empty());

  // identified words project to the same class
  auto const same = project(C::taiga(), sum_of({"13322", "33212"}));
  CHECK(same.size() == 1);
  CHECK(same.coefficient(ClassIndex{"taiga", parse_word("12332")}) == 2);
}

TEST_CASE("PBTm product and coproduct of the worked example", "[quotient]") {
  Pbtm const alg;
  auto const t        = tree("(1 (2) (1))");
  auto const expected = trees({"(3 . (1 . (1)))", "(1 . (1 (2) (1)))", "(2 (2) (1))",
                               "(1 (2) (1 . (1)))", "(2 (1 (2) .) .)", "(1 (1 (2) .) (1))",
                               "(1 (1 (2) (1)) .)"});
  CHECK(alg.product(t, tree("(1)")) == expected);
  CHECK(project_btm(m_product(PhiMap::packing, parse_word("1312"), Word{1})) == expected);
  CHECK(btm_of_word(parse_word("1312")) == t.tree);

  Tensor2<BtmIndex> delta;
  delta.add({alg.unit(), t}, 1);
  delta.add({tree("(2)"), tree("(1 . (1))")}, 1);
  delta.add({tree("(1 (2) .)"), tree("(1)")}, 1);
  delta.add({t, alg.unit()}, 1);
  CHECK(alg.coproduct(t) == delta);
  CHECK(project_btm(m_coproduct(PhiMap::packing, parse_word("3112"))) == delta);

  for (auto const& x : alg.basis(3)) {
    CHECK(alg.product(x, alg.unit()) == LinComb<BtmIndex>(x));
    CHECK(alg.product(alg.unit(), x) == LinComb<BtmIndex>(x));
  }
}

TEST_CASE("stalactic quotient", "[quotient]") {
  StalacticQuotient const q(C::stalactic(), true);
  auto const a = q.index_of(parse_word("112"));
  auto const b = q.index_of(parse_word("11"));
  CHECK(q.product(a, b) == project(C::stalactic(), m_product(PhiMap::packing,
                                                              parse_word("112"),
                                                              parse_word("11"))));
  CHECK(q.product(a, b).size() == 5);
  // a different representative of the same class
  auto const c = q.index_of(parse_word("211"));
  CHECK(q.index_of(parse_word("121")) == c);
  CHECK(q.members(c) == std::vector<Word>{parse_word("121"), parse_word("211")});
  CHECK(q.members(a) == std::vector<Word>{parse_word("112")});
  CHECK(q.product(c, b) == project(C::stalactic(), m_product(PhiMap::packing,
                                                              parse_word("211"),
                                                              parse_word("11"))));

  auto const d = q.coproduct(q.index_of(parse_word("332122")));
  CHECK(d.size() == 4);
  CHECK(d.coefficient({q.index_of(Word{1}), q.index_of(parse_word("22111"))}) == 1);
  CHECK(d.coefficient({q.index_of(parse_word("2122")), q.index_of(parse_word("11"))}) == 1);
  CHECK_THROWS_MATCHES(q.product(a, ClassIndex{"taiga", Word{1}}), Error,
                       Catch::Matchers::Predicate<Error>([](Error const& e) {
                         return e.kind() == ErrorKind::invalid_index;
                       }));
  CHECK(q_product(C::stalactic(), PhiMap::packing, a, b) == q.product(a, b));
}

TEST_CASE("quotients of good congruences are well defined", "[quotient][property]") {
  sweep(Pbtm(true), 5);
  sweep(QuotientAlgebra<PhiMap::packing>(C::taiga(), true), 4);
  sweep(QuotientAlgebra<PhiMap::packing>(C::stalactic(), true), 4);
  sweep(QuotientAlgebra<PhiMap::standardization>(C::sylvester(), true), 5);
  sweep(QuotientAlgebra<PhiMap::standardization>(C::meet(C::sylvester(), C::sylvester_sharp()),
                                                 true),
        5);
  sweep(QuotientAlgebra<PhiMap::standardization>(C::join(C::sylvester(), C::sylvester_sharp()),
                                                 true),
        5);
}

TEST_CASE("verification reports representative dependence", "[quotient]") {
  // Every congruence of the grammar is pack-good, so the failure path is
  // exercised on a deliberately inconsistent computation.
  std::vector<Word> const reps{Word{1, 2}, Word{2, 1}};
  auto const depends = [](Word const& u, Word const&) { return LinComb<Word>(u); };
  CHECK_THROWS_MATCHES(detail::verify_independent<LinComb<Word>>(reps, reps, depends, "product"),
                       Error, Catch::Matchers::Predicate<Error>([](Error const& e) {
                         return e.kind() == ErrorKind::not_well_defined;
                       }));
  auto const constant = [](Word const&, Word const&) { return LinComb<Word>(Word{1}); };
  CHECK_NOTHROW(detail::verify_independent<LinComb<Word>>(reps, reps, constant, "product"));
}

TEST_CASE("PBTm agrees with the taiga quotient", "[quotient]") {
  Pbtm const                             trees_alg;
  QuotientAlgebra<PhiMap::packing> const classes_alg(C::taiga());
  auto to_tree = [](ClassIndex const& c) { return BtmIndex{btm_of_word(c.representative)}; };
  std::vector<std::size_t> const dims{1, 1, 3, 10, 36, 137};
  for (std::size_t n = 0; n < dims.size(); ++n) {
    CHECK(trees_alg.basis(n).size() == dims[n]);
    CHECK(classes_alg.basis(n).size() == dims[n]);
  }
  for (std::size_t a = 0; a <= 3; ++a) {
    for (auto const& x : classes_alg.basis(a)) {
      auto const tx = to_tree(x);
      CHECK(relabel(tx.tree) == p_symbol(x.representative));
      CHECK(map_indices<std::pair<BtmIndex, BtmIndex>>(
                classes_alg.coproduct(x),
                [&](auto const& p) { return std::pair{to_tree(p.first), to_tree(p.second)}; })
            == trees_alg.coproduct(tx));
      for (std::size_t b = 0; a + b <= 4; ++b) {
        for (auto const& y : classes_alg.basis(b)) {
          CHECK(map_indices<BtmIndex>(classes_alg.product(x, y), to_tree)
                == trees_alg.product(tx, to_tree(y)));
        }
      }
    }
  }
}
