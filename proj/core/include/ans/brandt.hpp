#ifndef ANS_BRANDT_HPP_
#define ANS_BRANDT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ans {

  //! An element of the Brandt semigroup B_n: either a pair (i, j) with
  //! 1 <= i, j <= n, or the zero (serialized as "theta").
  //!
  //! A BrandtElem does not know its ambient n; validity against a particular
  //! n is checked by Brandt.  The default-constructed value is the zero.
  //! Ordering is the element order of B_n: zero first, then pairs
  //! lexicographically.
  class BrandtElem {
   public:
    constexpr BrandtElem() noexcept = default;

    static constexpr BrandtElem zero() noexcept {
      return BrandtElem();
    }

    // 1-based indices; throws ans::Error if either is 0 or too large.
    static BrandtElem pair(std::size_t i, std::size_t j);

    constexpr bool is_zero() const noexcept {
      return _row == 0;
    }

    // First coordinate (pi_1).  Throws on the zero.
    std::size_t row() const;
    // Second coordinate (pi_2).  Throws on the zero.
    std::size_t col() const;

    std::string to_string() const;
    static BrandtElem parse(std::string_view text);

    constexpr auto operator<=>(BrandtElem const&) const noexcept = default;

   private:
    constexpr BrandtElem(std::uint8_t i, std::uint8_t j) noexcept
        : _row(i), _col(j) {}

    std::uint8_t _row = 0;
    std::uint8_t _col = 0;
  };

  // The projections used by the Green's characterizations; both throw on
  // the zero, which has no coordinates.
  inline std::size_t project_first(BrandtElem x) {
    return x.row();
  }
  inline std::size_t project_second(BrandtElem x) {
    return x.col();
  }

  //! The Brandt semigroup B_n = ([n] x [n]) u {theta}.
  //!
  //! Elements are indexed 0 .. n^2 in element order: index 0 is theta and
  //! (i, j) has index 1 + (i - 1) n + (j - 1).  The index form is what FMap
  //! tables store.
  class Brandt {
   public:
    explicit Brandt(std::size_t n);

    std::size_t degree() const noexcept {
      return _n;
    }
    std::size_t size() const noexcept {
      return _n * _n + 1;
    }

    bool contains(BrandtElem x) const noexcept;
    BrandtElem at(std::size_t index) const;
    std::size_t index_of(BrandtElem x) const;

    BrandtElem add(BrandtElem a, BrandtElem b) const;

    // Product on indices, no validation.
    std::size_t add_index(std::size_t a, std::size_t b) const noexcept {
      if (a == 0 || b == 0) {
        return 0;
      }
      std::size_t const j = (a - 1) % _n;
      std::size_t const k = (b - 1) / _n;
      if (j != k) {
        return 0;
      }
      return a - j + (b - 1) % _n;
    }

    std::vector<BrandtElem> elements() const;
    std::vector<BrandtElem> idempotents() const;

   private:
    std::size_t _n;
  };

  BrandtElem brandt_add(BrandtElem a, BrandtElem b, std::size_t n);

  // {x : x + x = x}, in element order.
  std::vector<BrandtElem> brandt_idempotents(std::size_t n);

}  // namespace ans

#endif  // ANS_BRANDT_HPP_
