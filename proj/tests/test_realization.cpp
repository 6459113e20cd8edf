#include <random>

#include "catch_amalgamated.hpp"

#include "hopfcomb/realization.hpp"

using namespace hopfcomb;

namespace {
  LinComb<Word> sum_of(std::initializer_list<char const*> lits) {
    LinComb<Word> out;
    for (auto const* s : lits) {
      out.add(parse_word(s), 1);
    }
    return out;
  }

  // Every canonical word of the right length whose prefix and suffix map to
  // u and v.
  LinComb<Word> product_by_filter(PhiMap phi, Word const& u, Word const& v) {
    LinComb<Word> out;
    for (auto const& w : enumerate_canonical(phi, u.size() + v.size())) {
      auto const& l = w.letters();
      Word        prefix(std::vector<Letter>(l.begin(), l.begin() + u.size()));
      Word        suffix(std::vector<Letter>(l.begin() + u.size(), l.end()));
      if (apply_phi(phi, prefix) == u && apply_phi(phi, suffix) == v) {
        out.add(w, 1);
      }
    }
    return out;
  }

  auto const invalid_index = Catch::Matchers::Predicate<Error>(
      [](Error const& e) { return e.kind() == ErrorKind::invalid_index; });
}  // namespace

TEST_CASE("realizations", "[realization]") {
  // 231 is its own standardization, so it is not a term
  CHECK(realize(PhiMap::standardization, Word{1, 3, 2}, 3)
        == sum_of({"121", "131", "132", "232"}));
  CHECK(realize(PhiMap::standardization, Word{1, 3, 2}, 4).coefficient(parse_word("141")) == 1);
  CHECK(realize(PhiMap::packing, Word{1, 1}, 2) == sum_of({"11", "22"}));
  CHECK(realize(PhiMap::standardization, Word{1}, 1) == sum_of({"1"}));
  CHECK(realize(PhiMap::packing, Word{}, 3) == LinComb<Word>(Word{}));
  CHECK_THROWS_MATCHES(realize(PhiMap::standardization, Word{1, 1}, 3), Error, invalid_index);
}

TEST_CASE("m-basis products", "[realization]") {
  CHECK(m_product(PhiMap::standardization, Word{2, 1, 3}, Word{1})
        == sum_of({"2134", "2143", "3142", "3241"}));
  CHECK(m_product(PhiMap::packing, Word{1, 1, 2}, Word{1, 1})
        == sum_of({"11211", "11222", "11233", "11322", "22311"}));
  for (auto const& u : enumerate_canonical(PhiMap::packing, 3)) {
    CHECK(m_product(PhiMap::packing, u, Word{}) == LinComb<Word>(u));
    CHECK(m_product(PhiMap::packing, Word{}, u) == LinComb<Word>(u));
  }
  CHECK_THROWS_MATCHES(m_product(PhiMap::packing, Word{2}, Word{1}), Error, invalid_index);
}

TEST_CASE("m_product agrees with the defining filter", "[realization][property]") {
  for (auto phi : {PhiMap::standardization, PhiMap::packing}) {
    std::size_t const top = phi == PhiMap::standardization ? 7 : 5;
    for (std::size_t n = 0; n <= top; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (auto const& u : enumerate_canonical(phi, k)) {
          for (auto const& v : enumerate_canonical(phi, n - k)) {
            auto const p = m_product(phi, u, v);
            if (n <= 5) {
              CHECK(p == product_by_filter(phi, u, v));
            }
            if (phi == PhiMap::standardization) {
              CHECK(binomial(n, k) == p.size());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("m-basis coproducts", "[realization]") {
  Tensor2<Word> g;
  g.add({Word{}, Word{1, 3, 2}}, 1);
  g.add({Word{1}, Word{2, 1}}, 1);
  g.add({Word{1, 2}, Word{1}}, 1);
  g.add({Word{1, 3, 2}, Word{}}, 1);
  CHECK(m_coproduct(PhiMap::standardization, Word{1, 3, 2}) == g);

  Tensor2<Word> m;
  m.add({Word{}, parse_word("3112")}, 1);
  m.add({parse_word("11"), parse_word("21")}, 1);
  m.add({parse_word("112"), parse_word("1")}, 1);
  m.add({parse_word("3112"), Word{}}, 1);
  CHECK(m_coproduct(PhiMap::packing, parse_word("3112")) == m);

  Tensor2<Word> one;
  one.add({Word{}, Word{1}}, 1);
  one.add({Word{1}, Word{}}, 1);
  CHECK(m_coproduct(PhiMap::packing, Word{1}) == one);
  CHECK_THROWS_MATCHES(m_coproduct(PhiMap::packing, Word{1, 3}), Error, invalid_index);
}

TEST_CASE("realization is a Hopf morphism", "[realization]") {
  CHECK(check_realization(PhiMap::standardization, Word{2, 1, 3}, Word{1}, 4));
  CHECK(check_realization(PhiMap::packing, Word{1, 1, 2}, Word{1, 1}, 5));
  CHECK(check_realization(PhiMap::packing, Word{1}, Word{}, 1));
  CHECK_THROWS_AS(check_realization(PhiMap::packing, Word{1, 1}, Word{1}, 2), Error);

  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto const  phi = trial % 2 ? PhiMap::packing : PhiMap::standardization;
    std::size_t a   = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    std::size_t b   = std::uniform_int_distribution<std::size_t>(0, 4 - a)(rng);
    auto const  us  = enumerate_canonical(phi, a);
    auto const  vs  = enumerate_canonical(phi, b);
    auto const& u   = us[std::uniform_int_distribution<std::size_t>(0, us.size() - 1)(rng)];
    auto const& v   = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
    std::size_t N   = a + b + std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    INFO(to_string(u) << " " << to_string(v) << " N=" << N);
    CHECK(check_realization(phi, u, v, std::max<std::size_t>(N, 1)));
  }
}

TEST_CASE("phi-algebras", "[realization]") {
  Fqsym const f;
  CHECK(f.basis(3).size() == 6);
  CHECK(to_string(f.product(PermutationIndex{Word{2, 1, 3}}, PermutationIndex{Word{1}}))
        == "G_2134 + G_2143 + G_3142 + G_3241");
  Wqsym const w;
  CHECK(w.basis(3).size() == 13);
  CHECK(to_string(w.coproduct(PackedWordIndex{parse_word("3112")}))
        == "1 ⊗ M_3112 + M_11 ⊗ M_21 + M_112 ⊗ M_1 + M_3112 ⊗ 1");
}
