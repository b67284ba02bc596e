#ifndef ANS_FMAP_HPP_
#define ANS_FMAP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ans/brandt.hpp"

namespace ans {

  //! A total map B_n -> B_n, stored as a table indexed by Brandt::index_of.
  //!
  //! Arguments are written on the left: `f(x)` is xf, and compose(f, g)
  //! applies f first, so x(f o g) = (xf)g.  Pointwise addition is
  //! x(f + g) = xf + xg in B_n.
  class FMap {
   public:
    using value_type = std::uint8_t;

    FMap() = default;

    // Throws ans::Error if the table has the wrong length or an entry is not
    // an index of B_n.
    FMap(std::size_t n, std::vector<value_type> table);

    // No validation; the caller guarantees a well-formed table.
    static FMap unchecked(std::size_t n, std::vector<value_type> table) {
      FMap f;
      f._n     = n;
      f._table = std::move(table);
      return f;
    }

    static FMap constant(std::size_t n, BrandtElem value);
    static FMap identity(std::size_t n);
    static FMap zero(std::size_t n) {
      return constant(n, BrandtElem::zero());
    }

    std::size_t degree() const noexcept {
      return _n;
    }

    // Number of points in the domain, n^2 + 1.
    std::size_t domain_size() const noexcept {
      return _table.size();
    }

    BrandtElem operator()(BrandtElem x) const;

    // Index-level lookup, no validation.
    value_type at(std::size_t index) const noexcept {
      return _table[index];
    }

    std::span<value_type const> table() const noexcept {
      return _table;
    }

    std::vector<BrandtElem> support() const;
    std::size_t             support_size() const noexcept;

    // The full image set in element order, including theta when attained.
    std::vector<BrandtElem> image() const;

    bool is_constant() const noexcept;

    // The common second coordinate of the nonzero images, if there is one.
    std::optional<std::size_t> image_invariant() const;

    std::string table_string() const;

    auto operator<=>(FMap const&) const = default;

    struct Hash {
      std::size_t operator()(FMap const& f) const noexcept;
    };

   private:
    std::size_t             _n = 0;
    std::vector<value_type> _table;
  };

  BrandtElem eval(FMap const& f, BrandtElem x);

  // Throw ans::Error on degree mismatch.
  FMap pointwise_add(FMap const& f, FMap const& g);
  FMap compose(FMap const& f, FMap const& g);

  inline FMap operator+(FMap const& f, FMap const& g) {
    return pointwise_add(f, g);
  }

  inline std::vector<BrandtElem> support(FMap const& f) {
    return f.support();
  }
  inline std::vector<BrandtElem> image(FMap const& f) {
    return f.image();
  }
  inline std::optional<std::size_t> image_invariant(FMap const& f) {
    return f.image_invariant();
  }

}  // namespace ans

#endif  // ANS_FMAP_HPP_
