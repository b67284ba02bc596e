#ifndef ANS_JSON_IO_HPP_
#define ANS_JSON_IO_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "ans/affine.hpp"
#include "ans/closure.hpp"
#include "ans/formulas.hpp"
#include "ans/green.hpp"

namespace ans {

  // {n, kind, count, members: [canonical strings]}
  nlohmann::json to_json(GeneratorSet const& gens);

  // {format_version, n, count, elements, add_table, mul_table}
  nlohmann::json to_json(NearSemiring const& ns);

  // Elements are rebuilt from their canonical strings; the tables are taken
  // as stored (range-checked only), so a damaged file loads and is caught by
  // verification.  Throws ans::Error on a malformed document.
  NearSemiring near_semiring_from_json(nlohmann::json const& doc);

  // {R: [[...]], L, D, J, H, idempotents, regular, eventual_index}
  nlohmann::json to_json(GreenStructure const& gs);
  GreenStructure green_structure_from_json(nlohmann::json const& doc);

  nlohmann::json to_json(CountsTable const& t);

  // Fixed formatting (two-space indent, trailing newline) so that exports are
  // byte-comparable.
  std::string dump(nlohmann::json const& doc);

  void           write_json(std::filesystem::path const& path,
                            nlohmann::json const&        doc);
  nlohmann::json read_json(std::filesystem::path const& path);

}  // namespace ans

#endif  // ANS_JSON_IO_HPP_
