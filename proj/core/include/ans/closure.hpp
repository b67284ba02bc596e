#ifndef ANS_CLOSURE_HPP_
#define ANS_CLOSURE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ans/affine.hpp"
#include "ans/fmap.hpp"
#include "ans/semigroup.hpp"

namespace ans {

  //! A finite near-semiring of maps on B_n with both Cayley tables.
  //!
  //! `elements[i]` is the map with index i; add_table(i, j) is the index of
  //! elements[i] + elements[j] and mul_table(i, j) the index of
  //! compose(elements[i], elements[j]).
  struct NearSemiring {
    std::size_t       n = 0;
    std::vector<FMap> elements;
    CayleyTable       add_table;
    CayleyTable       mul_table;

    std::size_t size() const noexcept {
      return elements.size();
    }

    FiniteSemigroup additive() const {
      return {Reduct::additive, add_table};
    }
    FiniteSemigroup multiplicative() const {
      return {Reduct::multiplicative, mul_table};
    }
    FiniteSemigroup reduct(Reduct r) const {
      return r == Reduct::additive ? additive() : multiplicative();
    }

    // Throws ans::Error if f is not an element.
    element_index index_of(FMap const& f) const;

    std::vector<std::string> names() const;
  };

  struct ClosureOptions {
    // Number of worker threads for frontier expansion and table fill.  The
    // result does not depend on it.
    std::size_t jobs = 1;
    // Largest n accepted.
    std::size_t max_degree = 6;
  };

  //! The subsemigroup of (M(B_n), +) generated by `gens`, in canonical
  //! order, with both Cayley tables.
  //!
  //! Elements are generated by a breadth-first worklist adjoining s + g for
  //! known s and generators g.  Throws ans::Error if n exceeds the cap or the
  //! result is not closed under composition.
  NearSemiring additive_closure(GeneratorSet const&   gens,
                                ClosureOptions const& opts = {});

  // Both tables for a fixed element list (kept in the given order).
  NearSemiring make_near_semiring(std::size_t       n,
                                  std::vector<FMap> elements,
                                  std::size_t       jobs = 1);

  // A^+(B_n) = additive_closure(enumerate_aff(n)).
  NearSemiring affine_near_semiring(std::size_t n, ClosureOptions const& opts
                                                   = {});

  struct ValidationEntry {
    std::string                axiom;
    bool                       passed  = true;
    bool                       sampled = false;
    std::uint64_t              checked = 0;
    std::vector<element_index> witness;
  };

  struct ValidationReport {
    std::vector<ValidationEntry> entries;

    bool all_passed() const noexcept;
  };

  //! Checks associativity of both operations and left distributivity
  //! f(g + h) = fg + fh.  Exhaustive below opts.exhaustive_limit triples,
  //! sampled above.
  ValidationReport verify_near_semiring(NearSemiring const&         ns,
                                        AssociativityOptions const& opts = {});

  // |supp| -> number of elements
  std::map<std::size_t, std::size_t> support_histogram(NearSemiring const& ns);

  // No element has support size strictly between 1 and n, or between n and
  // n^2 + 1.
  bool intermediate_support_check(NearSemiring const& ns);

}  // namespace ans

#endif  // ANS_CLOSURE_HPP_
