#ifndef ANS_EGGBOX_HPP_
#define ANS_EGGBOX_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ans/green.hpp"
#include "ans/semigroup.hpp"

namespace ans {

  //! Egg-box diagram of a finite semigroup: one block per D-class, whose
  //! rows are the R-classes and columns the L-classes inside it; each cell
  //! holds an H-class.  Blocks, rows and columns are ordered by their least
  //! element index.
  struct EggBox {
    struct Block {
      std::vector<element_index>                           members;
      // cells[row][col], each sorted ascending; may be empty
      std::vector<std::vector<std::vector<element_index>>> cells;

      std::size_t rows() const noexcept {
        return cells.size();
      }
      std::size_t cols() const noexcept {
        return cells.empty() ? 0 : cells.front().size();
      }
    };

    Reduct                   reduct = Reduct::additive;
    std::vector<std::string> names;
    std::vector<bool>        idempotent;
    std::vector<Block>       blocks;
    // one line per empty cell, e.g. "D-class 3: cell (1,2) is empty"
    std::vector<std::string> empty_cells;

    std::size_t star_count() const;
  };

  EggBox make_eggbox(Reduct                          reduct,
                     std::vector<std::string> const& names,
                     GreenStructure const&           gs);

  std::string    render_text(EggBox const& box);
  std::string    render_dot(EggBox const& box);
  nlohmann::json to_json(EggBox const& box);

}  // namespace ans

#endif  // ANS_EGGBOX_HPP_
