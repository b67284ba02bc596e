#ifndef ANS_FORMULAS_HPP_
#define ANS_FORMULAS_HPP_

#include <cstddef>
#include <cstdint>

namespace ans {

  //! Closed-form counts for End(B_n), Aff(B_n), A^+(B_n) and the Green's
  //! structure of both reducts of A^+(B_n).
  //!
  //! For n >= 2 these are the published formulas.  For n = 1 the A^+ fields
  //! describe the three-element near-semiring {xi_theta, xi_(1,1), id}, in
  //! which every element is idempotent in both reducts.
  struct CountsTable {
    std::size_t   n;
    std::uint64_t end_count;
    std::uint64_t aut_count;
    std::uint64_t aff_count;
    std::uint64_t a_plus_total;

    struct Breakup {
      std::uint64_t full;
      std::uint64_t n_support;
      std::uint64_t singleton;
      std::uint64_t zero;
    } breakup;

    struct Additive {
      std::uint64_t r;
      std::uint64_t l;
      std::uint64_t d;
      std::uint64_t h;
      std::uint64_t idempotents;
      std::uint64_t regular;
    } additive;

    struct Multiplicative {
      std::uint64_t r;
      std::uint64_t l;
      std::uint64_t d;
      std::uint64_t h;
      std::uint64_t idempotents;
      std::uint64_t regular;
    } multiplicative;
  };

  // Throws ans::Error for n = 0 or when a count overflows 64 bits (n > 18).
  CountsTable counts(std::size_t n);

}  // namespace ans

#endif  // ANS_FORMULAS_HPP_
