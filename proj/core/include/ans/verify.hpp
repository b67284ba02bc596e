#ifndef ANS_VERIFY_HPP_
#define ANS_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ans/closure.hpp"
#include "ans/green.hpp"
#include "ans/semigroup.hpp"

namespace ans {

  struct VerifyOptions {
    // worker threads for the Green's computation; results do not depend on it
    std::size_t          jobs = 1;
    AssociativityOptions associativity;
  };

  struct CheckResult {
    std::string name;
    bool        passed = false;
    // measured value on success, first counterexample on failure
    std::string detail;
  };

  struct VerifyReport {
    std::size_t              n = 0;
    std::vector<CheckResult> checks;

    bool                     all_passed() const noexcept;
    std::vector<CheckResult> failures() const;
  };

  struct VerifyRun {
    VerifyReport                  report;
    std::optional<GreenStructure> additive;
    std::optional<GreenStructure> multiplicative;
  };

  //! Runs every structural check on a (computed or loaded) A^+(B_n):
  //! table consistency, element count and breakup against counts(n),
  //! End/Aut/Aff counts, near-semiring axioms, support lemmas, Green's class
  //! counts in both reducts, analytic-vs-brute agreement on all pairs,
  //! idempotents, regularity, and the subset and isomorphism checks.
  //!
  //! Never throws for a damaged structure; each failure becomes a failed
  //! check carrying a witness.
  VerifyRun verify_structure(NearSemiring const&  ns,
                             VerifyOptions const& opts = {});

  // One line per check ("name: PASS" or "name: FAIL (witness)").
  std::string    render_report(VerifyReport const& report);
  nlohmann::json to_json(VerifyReport const& report);

}  // namespace ans

#endif  // ANS_VERIFY_HPP_
