#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "hopfcomb/word.hpp"

using namespace hopfcomb;

namespace {
  Word random_word(std::mt19937& rng, std::size_t maxlen, Letter alphabet) {
    std::uniform_int_distribution<std::size_t> len(0, maxlen);
    std::uniform_int_distribution<Letter>      letter(1, alphabet);
    std::vector<Letter>                        v(len(rng));
    for (auto& l : v) {
      l = letter(rng);
    }
    return Word(std::move(v));
  }

  // Brute-force oracle: words over {1..n}^n fixed by the phi-map.
  std::vector<Word> canonical_by_filter(PhiMap phi, std::size_t n) {
    std::vector<Word> out;
    for_each_word(static_cast<Letter>(n), n, [&](Word const& w) {
      if (apply_phi(phi, w) == w) {
        out.push_back(w);
      }
    });
    return out;
  }
}  // namespace

TEST_CASE("part lists positions per letter in letter order", "[words]") {
  using P = std::vector<std::vector<std::size_t>>;
  CHECK(part(Word{1, 3, 2, 3, 1}).parts == P{{1, 5}, {3}, {2, 4}});
  CHECK(part(Word{1, 1, 1, 2}).parts == P{{1, 2, 3}, {4}});
  CHECK(part(Word{}).parts.empty());
}

TEST_CASE("standardize and pack reproduce the reference tables", "[words]") {
  CHECK(standardize(Word{7, 2, 14, 3, 7}) == Word{3, 1, 5, 2, 4});
  CHECK(standardize(Word{23, 14, 5, 92}) == Word{3, 2, 1, 4});
  CHECK(standardize(Word{4, 2, 1, 3, 5}) == Word{4, 2, 1, 3, 5});
  CHECK(standardize(Word{1, 5, 1, 1, 5, 5}) == Word{1, 4, 2, 3, 5, 6});

  CHECK(pack(Word{3, 13, 3, 2, 13}) == Word{2, 3, 2, 1, 3});
  CHECK(pack(Word{2, 2, 2, 5, 8, 2}) == Word{1, 1, 1, 2, 3, 1});
  CHECK(pack(Word{4, 2, 1, 3, 5}) == Word{4, 2, 1, 3, 5});
  CHECK(pack(Word{2, 3, 1, 1, 2}) == Word{2, 3, 1, 1, 2});
}

TEST_CASE("evaluation counts letters", "[words]") {
  CHECK(evaluation(parse_word("45142234212"))
        == Evaluation{{1, 2}, {2, 4}, {3, 1}, {4, 3}, {5, 1}});
  CHECK(evaluation(Word{}).empty());
  CHECK(evaluation(Word{1, 3, 2, 3, 1}) == evaluation(Word{3, 2, 1, 3, 1}));
}

TEST_CASE("restrict keeps letters of an interval", "[words]") {
  CHECK(restrict(Word{3, 1, 1, 2}, 1, 2) == Word{1, 1, 2});
  CHECK(restrict(Word{3, 1, 1, 2}, 3, 3) == Word{3});
  Word const w{4, 5, 1, 4, 2};
  CHECK(restrict(w, 1, w.max_letter()) == w);
  CHECK_THROWS_MATCHES(restrict(w, 3, 2), Error,
                       Catch::Matchers::Predicate<Error>([](Error const& e) {
                         return e.kind() == ErrorKind::invalid_interval;
                       }));
}

TEST_CASE("apply_phi and is_canonical", "[words]") {
  // positions 1,2,4 carry the letter 1 and are numbered 1,2,3
  CHECK(apply_phi(PhiMap::standardization, Word{1, 1, 2, 1}) == Word{1, 2, 4, 3});
  CHECK(apply_phi(PhiMap::packing, Word{1, 1, 2, 1}) == Word{1, 1, 2, 1});
  CHECK(apply_phi(PhiMap::standardization, Word{1, 4, 2, 3}) == Word{1, 4, 2, 3});
  CHECK(is_canonical(PhiMap::standardization, Word{1, 4, 2, 3}));
  CHECK(is_canonical(PhiMap::packing, Word{1, 1, 2, 1}));
  CHECK_FALSE(is_canonical(PhiMap::standardization, Word{1, 1, 2, 1}));
}

TEST_CASE("enumerate_canonical matches the brute-force filter", "[words]") {
  CHECK(enumerate_canonical(PhiMap::standardization, 3).size() == 6);
  CHECK(enumerate_canonical(PhiMap::packing, 2)
        == std::vector<Word>{Word{1, 1}, Word{1, 2}, Word{2, 1}});
  CHECK(enumerate_canonical(PhiMap::packing, 3).size() == 13);
  CHECK(enumerate_canonical(PhiMap::packing, 0) == std::vector<Word>{Word{}});
  for (std::size_t n = 0; n <= 6; ++n) {
    for (auto phi : {PhiMap::standardization, PhiMap::packing}) {
      auto const fast = enumerate_canonical(phi, n);
      CHECK(fast == canonical_by_filter(phi, n));
      CHECK(std::is_sorted(fast.begin(), fast.end()));
    }
  }
}

TEST_CASE("refinement order between std and pack", "[words]") {
  auto r = check_refinement(PhiMap::standardization, PhiMap::packing, 5);
  CHECK(r.holds);
  r = check_refinement(PhiMap::packing, PhiMap::standardization, 5);
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample);
  CHECK(*r.counterexample == Word{1, 1});
  CHECK(check_refinement(PhiMap::standardization, PhiMap::standardization, 5).holds);
}

TEST_CASE("word literals", "[words]") {
  CHECK(parse_word("45142234212").size() == 11);
  CHECK(parse_word("7,2,14,3,7") == Word{7, 2, 14, 3, 7});
  CHECK(parse_word("[7, 2, 14]") == Word{7, 2, 14});
  CHECK(parse_word("14,") == Word{14});
  CHECK(parse_word("") == Word{});
  CHECK(to_string(Word{7, 2, 14}) == "7,2,14");
  CHECK(to_string(Word{4, 5, 1}) == "451");
  CHECK(to_string(Word{14}) == "14,");
  CHECK_THROWS_AS(parse_word("1a2"), Error);
  CHECK_THROWS_AS(parse_word("102"), Error);
  CHECK_THROWS_AS(parse_word("1,,2"), Error);
  CHECK_THROWS_AS(Word({1, 0}), Error);
}

TEST_CASE("word map properties on random words", "[words][property]") {
  std::mt19937 rng(20240917);
  for (int trial = 0; trial < 2000; ++trial) {
    auto const w = random_word(rng, 9, 12);
    for (auto phi : {PhiMap::standardization, PhiMap::packing}) {
      CHECK(apply_phi(phi, apply_phi(phi, w)) == apply_phi(phi, w));
    }
    CHECK(part(pack(w)) == part(w));
    CHECK(to_string(parse_word(to_string(w))) == to_string(w));
    CHECK(parse_word(to_string(w)) == w);

    auto const s = standardize(w);
    std::vector<Letter> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      CHECK(sorted[i] == i + 1);
    }
    auto const p = pack(w);
    std::set<Letter> letters(p.begin(), p.end());
    CHECK(letters.size() == p.max_letter());

    auto const u = random_word(rng, 5, 12);
    Letter     lo = std::uniform_int_distribution<Letter>(1, 12)(rng);
    Letter     hi = std::uniform_int_distribution<Letter>(lo, 12)(rng);
    CHECK(restrict(concat(u, w), lo, hi) == concat(restrict(u, lo, hi), restrict(w, lo, hi)));
  }
}
