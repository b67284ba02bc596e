#ifndef ANS_ANALYTIC_HPP_
#define ANS_ANALYTIC_HPP_

#include "ans/canonical.hpp"
#include "ans/green.hpp"

namespace ans {

  //! Green's relations on (A^+(B_n), +) decided from normal forms alone.
  //!
  //! Related elements have equal supports, so elements of different support
  //! sizes are never related.  Among constants and singleton-support maps,
  //! R compares the first coordinate of the image, L the second, and D only
  //! the support.  Among n-support maps R compares the support column and
  //! the row permutation, L is equality, and D = R.  J = D and H = R n L.
  //!
  //! Throws ans::Error if f and g have different degrees.
  bool green_analytic_additive(CanonicalElem const& f,
                               CanonicalElem const& g,
                               GreenRelation        rel);

  //! Green's relations on (A^+(B_n), o) decided from normal forms alone.
  //!
  //! R: all constants are related; nonconstant maps are related iff their
  //! supports agree.  L: equal images.  H: equal supports and images.
  //! D (= J): equal support sizes, or both constant.
  //!
  //! Throws ans::Error if f and g have different degrees.
  bool green_analytic_multiplicative(CanonicalElem const& f,
                                     CanonicalElem const& g,
                                     GreenRelation        rel);

  inline bool green_analytic(Reduct               reduct,
                             CanonicalElem const& f,
                             CanonicalElem const& g,
                             GreenRelation        rel) {
    return reduct == Reduct::additive
               ? green_analytic_additive(f, g, rel)
               : green_analytic_multiplicative(f, g, rel);
  }

}  // namespace ans

#endif  // ANS_ANALYTIC_HPP_
