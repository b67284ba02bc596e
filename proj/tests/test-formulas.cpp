#include "catch_amalgamated.hpp"

#include "ans/affine.hpp"
#include "ans/canonical.hpp"
#include "ans/closure.hpp"
#include "ans/exception.hpp"
#include "ans/formulas.hpp"
#include "ans/green.hpp"

using namespace ans;

TEST_CASE("counts(2) reproduces the worked example", "[formulas]") {
  auto const t = counts(2);
  REQUIRE(t.end_count == 5);
  REQUIRE(t.aut_count == 2);
  REQUIRE(t.aff_count == 13);
  REQUIRE(t.a_plus_total == 29);
  REQUIRE(t.breakup.full == 4);
  REQUIRE(t.breakup.n_support == 8);
  REQUIRE(t.breakup.singleton == 16);
  REQUIRE(t.breakup.zero == 1);
  REQUIRE(t.additive.r == 15);
  REQUIRE(t.additive.l == 19);
  REQUIRE(t.additive.d == 10);
  REQUIRE(t.additive.h == 29);
  REQUIRE(t.additive.idempotents == 11);
  REQUIRE(t.additive.regular == 21);
  REQUIRE(t.multiplicative.r == 7);
  REQUIRE(t.multiplicative.l == 11);
  REQUIRE(t.multiplicative.d == 3);
  REQUIRE(t.multiplicative.h == 25);
  REQUIRE(t.multiplicative.idempotents == 11);
  REQUIRE(t.multiplicative.regular == 29);
}

TEST_CASE("counts(n) follows the closed forms", "[formulas]") {
  std::uint64_t fact = 1;
  for (std::uint64_t n = 2; n <= 18; ++n) {
    fact *= n;
    CAPTURE(n);
    auto const    t  = counts(n);
    std::uint64_t n2 = n * n, n3 = n2 * n, n4 = n2 * n2;
    REQUIRE(t.end_count == fact + n + 1);
    REQUIRE(t.aut_count == fact);
    REQUIRE(t.aff_count == (fact + 1) * n2 + 1);
    REQUIRE(t.a_plus_total == (fact + 1) * n2 + n4 + 1);
    REQUIRE(t.additive.r == fact * n + n3 + n + 1);
    REQUIRE(t.additive.l == fact * n2 + n3 + n + 1);
    REQUIRE(t.additive.d == fact * n + n2 + 2);
    REQUIRE(t.additive.h == t.a_plus_total);
    REQUIRE(t.additive.idempotents == n3 + n + 1);
    REQUIRE(t.additive.regular == n4 + n2 + 1);
    REQUIRE(t.additive.regular
            == t.breakup.singleton + t.breakup.full + t.breakup.zero);
    REQUIRE(t.multiplicative.r == n2 + n + 1);
    REQUIRE(t.multiplicative.l == 2 * n2 + n + 1);
    REQUIRE(t.multiplicative.d == 3);
    REQUIRE(t.multiplicative.h == n4 + 2 * n2 + 1);
    REQUIRE(t.multiplicative.idempotents == 2 * n2 + n + 1);
    REQUIRE(t.multiplicative.regular == t.a_plus_total);
  }
}

TEST_CASE("counts(3) values", "[formulas]") {
  auto const t = counts(3);
  REQUIRE(t.end_count == 10);
  REQUIRE(t.aff_count == 64);
  REQUIRE(t.a_plus_total == 145);
  REQUIRE(t.additive.r == 49);
  REQUIRE(t.additive.l == 85);
  REQUIRE(t.additive.d == 29);
  REQUIRE(t.multiplicative.r == 13);
  REQUIRE(t.multiplicative.l == 22);
  REQUIRE(t.multiplicative.h == 100);
}

TEST_CASE("counts(n) equals the measured structure for n = 1..4",
          "[formulas]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto const t  = counts(n);
    auto const ns = affine_near_semiring(n);
    REQUIRE(t.end_count == enumerate_end(n).size());
    REQUIRE(t.aut_count == enumerate_aut(n).size());
    REQUIRE(t.aff_count == enumerate_aff(n).size());
    REQUIRE(t.a_plus_total == ns.size());

    std::uint64_t shape[4] = {};
    for (auto const& f : ns.elements) {
      ++shape[static_cast<int>(classify(f).shape())];
    }
    REQUIRE(t.breakup.zero == shape[0]);
    REQUIRE(t.breakup.full == shape[1]);
    REQUIRE(t.breakup.singleton == shape[2]);
    REQUIRE(t.breakup.n_support == shape[3]);

    auto const a = class_counts(green_brute(ns.additive()));
    REQUIRE(t.additive.r == a.r);
    REQUIRE(t.additive.l == a.l);
    REQUIRE(t.additive.d == a.d);
    REQUIRE(t.additive.h == a.h);
    REQUIRE(t.additive.idempotents == a.idempotents);
    REQUIRE(t.additive.regular == a.regular);

    auto const m = class_counts(green_brute(ns.multiplicative()));
    REQUIRE(t.multiplicative.r == m.r);
    REQUIRE(t.multiplicative.l == m.l);
    REQUIRE(t.multiplicative.d == m.d);
    REQUIRE(t.multiplicative.h == m.h);
    REQUIRE(t.multiplicative.idempotents == m.idempotents);
    REQUIRE(t.multiplicative.regular == m.regular);
  }
}

TEST_CASE("counts(1) describes the three-element near-semiring",
          "[formulas]") {
  auto const t = counts(1);
  REQUIRE(t.a_plus_total == 3);
  REQUIRE(t.end_count == 3);
  REQUIRE(t.aff_count == 3);
  REQUIRE(t.additive.idempotents == 3);
  REQUIRE(t.multiplicative.idempotents == 3);
  REQUIRE(t.additive.regular == 3);
  REQUIRE(t.multiplicative.regular == 3);
}

TEST_CASE("counts rejects n = 0 and overflow", "[formulas]") {
  REQUIRE_THROWS_AS(counts(0), Error);
  REQUIRE_NOTHROW(counts(18));
  REQUIRE_THROWS_AS(counts(19), Error);
}
