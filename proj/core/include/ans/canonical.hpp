#ifndef ANS_CANONICAL_HPP_
#define ANS_CANONICAL_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ans/brandt.hpp"
#include "ans/fmap.hpp"
#include "ans/perm.hpp"

namespace ans {

  // xi_theta
  struct ZeroMap {
    auto operator<=>(ZeroMap const&) const = default;
  };

  // xi_alpha, alpha nonzero
  struct ConstantMap {
    BrandtElem value;
    auto       operator<=>(ConstantMap const&) const = default;
  };

  // <source -> target>: source |-> target, everything else |-> theta
  struct SingletonMap {
    BrandtElem source;
    BrandtElem target;
    auto       operator<=>(SingletonMap const&) const = default;
  };

  // (k, q; sigma): (i, k) |-> (i sigma, q), everything else |-> theta
  struct NSupportMap {
    std::size_t column_in;
    std::size_t column_out;
    Perm        row_action;
    auto        operator<=>(NSupportMap const&) const = default;
  };

  enum class Shape { zero = 0, constant = 1, singleton = 2, n_support = 3 };

  //! The normal form of an element of A^+(B_n).
  //!
  //! Every element of A^+(B_n) is exactly one of: the zero map, a nonzero
  //! constant, a singleton-support map, or an n-support map given by its
  //! triple (k, q; sigma).  Values are validated against n on construction.
  //! At n = 1 the identity map is both singleton- and n-support; it is
  //! represented as (1,1;[1]) and SingletonMap is rejected.
  //!
  //! The ordering is the canonical element order of A^+(B_n): zero, then
  //! constants, singletons (by source, then target), then n-support maps
  //! (by k, q, sigma).
  class CanonicalElem {
   public:
    using variant_type
        = std::variant<ZeroMap, ConstantMap, SingletonMap, NSupportMap>;

    CanonicalElem(std::size_t n, variant_type shape);

    std::size_t degree() const noexcept {
      return _n;
    }
    Shape shape() const noexcept {
      return static_cast<Shape>(_shape.index());
    }
    variant_type const& value() const noexcept {
      return _shape;
    }

    template <typename T>
    T const& get() const {
      return std::get<T>(_shape);
    }

    // Closed-form support and image, computed from the shape alone.
    std::vector<BrandtElem> support() const;
    std::vector<BrandtElem> image() const;
    std::size_t             support_size() const noexcept;

    // "xi_theta", "xi(i,j)", "<(k,l)->(p,q)>", "(k,q;[sigma])"
    std::string          to_string() const;
    static CanonicalElem parse(std::string const& text, std::size_t n);

    auto operator<=>(CanonicalElem const&) const = default;

   private:
    std::size_t  _n;
    variant_type _shape;
  };

  // Throws NotAffineElement if f is not one of the four shapes.
  CanonicalElem classify(FMap const& f);

  // As classify, but returns nullopt instead of throwing.
  std::optional<CanonicalElem> try_classify(FMap const& f);

  FMap render(CanonicalElem const& c);

  // Every element of A^+(B_n) in canonical order, built from the shapes.
  std::vector<CanonicalElem> enumerate_canonical(std::size_t n);

  // Canonical element order on arbitrary maps: maps that classify come first
  // in canonical order, the rest follow ordered by table.
  bool canonical_less(FMap const& f, FMap const& g);

  // Sorts into canonical order, classifying each map once.
  void sort_canonical(std::vector<FMap>& maps);

  // The canonical string if f classifies, otherwise "phi[sigma]" for an
  // automorphism, otherwise the raw table.
  std::string describe(FMap const& f);

}  // namespace ans

#endif  // ANS_CANONICAL_HPP_
