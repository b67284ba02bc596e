#ifndef ANS_PERM_HPP_
#define ANS_PERM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ans {

  //! A permutation of [n], stored in one-line notation with 1-based values.
  //!
  //! Permutations act on the right: i(pq) = (ip)q, so `p * q` applies p
  //! first.  Ordering is lexicographic on the one-line notation, which is
  //! also the order produced by enumerate_sn.
  class Perm {
   public:
    Perm() = default;

    // Throws ans::Error unless `images` is a bijection on [images.size()].
    explicit Perm(std::vector<std::size_t> const& images);

    static Perm identity(std::size_t n);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    // Image of i, 1-based.
    std::size_t operator()(std::size_t i) const {
      return _images.at(i - 1);
    }

    Perm inverse() const;
    bool is_identity() const noexcept;

    std::vector<std::size_t> images() const;

    // "[2,1]"
    std::string to_string() const;
    static Perm parse(std::string const& text);

    auto operator<=>(Perm const&) const = default;

   private:
    std::vector<std::uint8_t> _images;
  };

  // i(p * q) = (ip)q; throws on degree mismatch.
  Perm operator*(Perm const& p, Perm const& q);

  inline Perm perm_compose(Perm const& p, Perm const& q) {
    return p * q;
  }

  inline Perm perm_inverse(Perm const& p) {
    return p.inverse();
  }

  // All n! permutations of [n] in lexicographic order.
  std::vector<Perm> enumerate_sn(std::size_t n);

  std::size_t factorial(std::size_t n);

}  // namespace ans

#endif  // ANS_PERM_HPP_
