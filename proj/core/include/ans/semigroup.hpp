#ifndef ANS_SEMIGROUP_HPP_
#define ANS_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ans {

  using element_index = std::uint32_t;

  //! Dense square multiplication table over element indices 0 .. size-1.
  class CayleyTable {
   public:
    CayleyTable() = default;
    explicit CayleyTable(std::size_t size)
        : _size(size), _data(size * size, 0) {}

    std::size_t size() const noexcept {
      return _size;
    }

    element_index operator()(std::size_t a, std::size_t b) const noexcept {
      return _data[a * _size + b];
    }

    void set(std::size_t a, std::size_t b, element_index value) noexcept {
      _data[a * _size + b] = value;
    }

    element_index const* row(std::size_t a) const noexcept {
      return _data.data() + a * _size;
    }

    bool operator==(CayleyTable const&) const = default;

   private:
    std::size_t                _size = 0;
    std::vector<element_index> _data;
  };

  enum class Reduct { additive, multiplicative };

  std::string to_string(Reduct r);
  Reduct      reduct_from_string(std::string const& name);

  //! A finite semigroup given by its Cayley table.  Element i of the table
  //! is whatever the producer put at position i; the Green's engine only
  //! needs the table.
  struct FiniteSemigroup {
    Reduct      label = Reduct::additive;
    CayleyTable table;

    std::size_t size() const noexcept {
      return table.size();
    }
    element_index product(std::size_t a, std::size_t b) const noexcept {
      return table(a, b);
    }

    // Throws ans::Error if an entry is out of range.
    void check_closed() const;
  };

  struct AssociativityOptions {
    // Exhaustive when size^3 is at most this, otherwise `samples` random
    // triples drawn with `seed`.
    std::uint64_t exhaustive_limit = 5'000'000;
    std::uint64_t samples          = 100'000;
    std::uint64_t seed             = 0x5eed;
  };

  struct AssociativityResult {
    bool                                        holds   = true;
    bool                                        sampled = false;
    std::uint64_t                               checked = 0;
    std::optional<std::array<element_index, 3>> witness;
  };

  AssociativityResult check_associativity(CayleyTable const&          table,
                                          AssociativityOptions const& opts
                                          = {});

}  // namespace ans

#endif  // ANS_SEMIGROUP_HPP_
