#ifndef ANS_CONFIG_HPP_
#define ANS_CONFIG_HPP_

#include <cstddef>

namespace ans {

  // Largest degree accepted by the closure engine and the CLI.
  inline constexpr std::size_t max_degree = 6;

  // Largest degree representable by BrandtElem / FMap (n^2 + 1 <= 256).
  inline constexpr std::size_t max_representable_degree = 15;

  // Bumped whenever the on-disk JSON layout of a NearSemiring changes.
  inline constexpr int format_version = 1;

}  // namespace ans

#endif  // ANS_CONFIG_HPP_
