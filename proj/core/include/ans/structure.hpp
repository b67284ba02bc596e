#ifndef ANS_STRUCTURE_HPP_
#define ANS_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ans/closure.hpp"
#include "ans/semigroup.hpp"

namespace ans {

  //! Properties of a subset of one reduct of A^+(B_n).
  //!
  //! `inverse` and `orthodox` are only set when the subset is closed and
  //! regular; they are recomputed from the definitions (commuting
  //! idempotents, idempotents closed under the operation).  When the
  //! (subset, reduct) pair has a known isomorphism type, the explicit
  //! bijection is checked and the result stored in `isomorphism_verified`.
  struct SubsetReport {
    std::string                subset;
    Reduct                     reduct = Reduct::additive;
    std::vector<element_index> members;
    bool                       closed              = false;
    bool                       regular             = false;
    bool                       idempotents_commute = false;
    bool                       idempotents_closed  = false;
    bool                       inverse             = false;
    bool                       orthodox            = false;
    std::optional<std::string> isomorphism_target;
    std::optional<bool>        isomorphism_verified;
    // first counterexample found, if any
    std::string detail;
  };

  // "all", "K", "N", "constants", "singleton-ideal"
  std::vector<std::string> const& subset_names();

  // Element indices of the named subset; throws ans::Error on an unknown
  // name.  K is the set of regular elements of the additive reduct, N the
  // elements without full support, and the singleton ideal the maps with at
  // most one support point.
  std::vector<element_index> subset_members(NearSemiring const& ns,
                                            std::string const&  subset);

  SubsetReport structural_checks(NearSemiring const& ns,
                                 Reduct              reduct,
                                 std::string const&  subset);

  //! sigma |-> phi_sigma is a bijection S_n -> Aut(B_n) with
  //! phi_(sigma tau) = phi_sigma o phi_tau.
  struct AutIsomorphismReport {
    bool        bijective     = false;
    bool        homomorphism  = false;
    std::string detail;
  };

  AutIsomorphismReport check_aut_isomorphism(std::size_t n);

}  // namespace ans

#endif  // ANS_STRUCTURE_HPP_
