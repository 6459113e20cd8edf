#include "catch_amalgamated.hpp"

#include "hopfcomb/axioms.hpp"
#include "hopfcomb/dual.hpp"

using namespace hopfcomb;

namespace {
  // WQSym with the primitive part of every coproduct dropped; the counit law
  // and compatibility must fail.
  struct BrokenWqsym : Wqsym {
    [[nodiscard]] std::string name() const {
      return "broken";
    }
    [[nodiscard]] Tensor2<index_type> coproduct(index_type const& a) const {
      auto d = Wqsym::coproduct(a);
      if (!a.word.empty()) {
        d.add({unit(), a}, -1);
      }
      return d;
    }
  };

  // Product of WQSym with the coproduct of its dual: each structure is fine on
  // its own, the pair is not a bialgebra.
  struct MismatchedWqsym : Wqsym {
    [[nodiscard]] std::string name() const {
      return "mismatched";
    }
    [[nodiscard]] Tensor2<index_type> coproduct(index_type const& a) const {
      using P = std::pair<index_type, index_type>;
      return map_indices<P>(s_coproduct(a.word), [](std::pair<Word, Word> const& p) {
        return P{index_type{p.first}, index_type{p.second}};
      });
    }
  };

  void require_ok(HopfReport const& r) {
    std::string witnesses;
    for (auto const& v : r.violations) {
      witnesses += v + "; ";
    }
    INFO(r.algebra << ": " << witnesses);
    CHECK(r.ok());
    CHECK(r.violations.empty());
    CHECK(r.checks > 0);
  }
}  // namespace

TEST_CASE("Hopf axioms hold", "[axioms]") {
  require_ok(check_hopf_axioms(Fqsym{}, 4));
  require_ok(check_hopf_axioms(Wqsym{}, 4));
  require_ok(check_hopf_axioms(StalacticQuotient(CongruenceExpr::stalactic()), 4));
  require_ok(check_hopf_axioms(QuotientAlgebra<PhiMap::standardization>(
                                   CongruenceExpr::meet(CongruenceExpr::sylvester(),
                                                        CongruenceExpr::sylvester_sharp())),
                               4));
  require_ok(check_hopf_axioms(Pbtm{}, 4));
  require_ok(check_hopf_axioms(PbtmDual{}, 4));
  require_ok(check_hopf_axioms(WqsymDual{}, 3));
}

TEST_CASE("degree zero unit laws", "[axioms]") {
  auto const r = check_hopf_axioms(Fqsym{}, 0);
  CHECK(r.ok());
  CHECK(r.degree == 0);
}

TEST_CASE("violations are reported with witnesses", "[axioms]") {
  auto const broken = check_hopf_axioms(BrokenWqsym{}, 2);
  CHECK_FALSE(broken.ok());
  CHECK_FALSE(broken.counit);
  CHECK(broken.associativity);
  REQUIRE_FALSE(broken.violations.empty());
  CHECK(broken.violations.front().find("counit") != std::string::npos);

  auto const mismatched = check_hopf_axioms(MismatchedWqsym{}, 3);
  CHECK(mismatched.associativity);
  CHECK(mismatched.coassociativity);
  CHECK(mismatched.unit);
  CHECK(mismatched.counit);
  CHECK_FALSE(mismatched.compatibility);
}
