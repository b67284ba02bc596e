#ifndef ANS_AFFINE_HPP_
#define ANS_AFFINE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ans/fmap.hpp"
#include "ans/perm.hpp"

namespace ans {

  enum class GeneratorKind { end, aut, aff, const_all };

  std::string   to_string(GeneratorKind kind);
  GeneratorKind generator_kind_from_string(std::string const& name);

  //! A family of maps on B_n: End(B_n), Aut(B_n), Aff(B_n), or all constants.
  //!
  //! Members are distinct and held in canonical order.  The constructor
  //! checks the member count against the closed form for the kind.
  class GeneratorSet {
   public:
    GeneratorSet(std::size_t n, GeneratorKind kind, std::vector<FMap> members);

    std::size_t degree() const noexcept {
      return _n;
    }
    GeneratorKind kind() const noexcept {
      return _kind;
    }
    std::vector<FMap> const& members() const noexcept {
      return _members;
    }
    std::size_t size() const noexcept {
      return _members.size();
    }

   private:
    std::size_t       _n;
    GeneratorKind     _kind;
    std::vector<FMap> _members;
  };

  // (i, j) |-> (i sigma, j sigma), theta |-> theta
  FMap phi_sigma(Perm const& sigma);

  // (a + b)f = af + bf for all a, b in B_n
  bool is_endomorphism(FMap const& f);

  GeneratorSet enumerate_aut(std::size_t n);
  GeneratorSet enumerate_end(std::size_t n);
  GeneratorSet enumerate_constants(std::size_t n);

  // All sums g + xi with g in End(B_n) and xi constant, deduplicated.
  GeneratorSet enumerate_aff(std::size_t n);

  GeneratorSet enumerate_generators(std::size_t n, GeneratorKind kind);

  struct Triple {
    std::size_t column_in;   // k
    std::size_t column_out;  // q
    Perm        row_action;  // sigma
    auto        operator<=>(Triple const&) const = default;
  };

  // phi_sigma + xi_(k sigma, q), the n-support map with support column k.
  FMap triple_to_map(std::size_t k, std::size_t q, Perm const& sigma);

  // Throws ans::Error unless f is an n-support element of A^+(B_n).
  Triple map_to_triple(FMap const& f);

}  // namespace ans

#endif  // ANS_AFFINE_HPP_
