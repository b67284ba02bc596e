#include "ans/eggbox.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ans {

  namespace {
    std::string plural(std::size_t k, std::string const& word) {
      return std::to_string(k) + " " + word + (k == 1 ? "" : "es");
    }

    std::string plural_s(std::size_t k, std::string const& word) {
      return std::to_string(k) + " " + word + (k == 1 ? "" : "s");
    }

    std::string cell_text(EggBox const& box,
                          std::vector<element_index> const& cell) {
      std::string out;
      for (std::size_t i = 0; i < cell.size(); ++i) {
        if (i != 0) {
          out += ", ";
        }
        if (box.idempotent[cell[i]]) {
          out += '*';
        }
        out += box.names[cell[i]];
      }
      return out;
    }

    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }

    std::size_t display_width(std::string const& s) {
      // count code points, not bytes
      return static_cast<std::size_t>(std::count_if(
          s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
    }
  }  // namespace

  std::size_t EggBox::star_count() const {
    return static_cast<std::size_t>(
        std::count(idempotent.begin(), idempotent.end(), true));
  }

  EggBox make_eggbox(Reduct                          reduct,
                     std::vector<std::string> const& names,
                     GreenStructure const&           gs) {
    EggBox box;
    box.reduct     = reduct;
    box.names      = names;
    box.idempotent = gs.idempotent;

    for (auto const& dclass : gs.d.classes()) {
      EggBox::Block block;
      block.members = dclass;
      // R- and L-classes met by this D-class, ordered by least element
      std::map<element_index, std::size_t> row_of_rep, col_of_rep;
      for (auto x : dclass) {
        row_of_rep.emplace(gs.r.classes()[gs.r.class_of(x)].front(), 0);
        col_of_rep.emplace(gs.l.classes()[gs.l.class_of(x)].front(), 0);
      }
      std::size_t i = 0;
      for (auto& [rep, idx] : row_of_rep) {
        idx = i++;
      }
      i = 0;
      for (auto& [rep, idx] : col_of_rep) {
        idx = i++;
      }
      block.cells.assign(
          row_of_rep.size(),
          std::vector<std::vector<element_index>>(col_of_rep.size()));
      for (auto x : dclass) {
        auto const r = row_of_rep[gs.r.classes()[gs.r.class_of(x)].front()];
        auto const c = col_of_rep[gs.l.classes()[gs.l.class_of(x)].front()];
        block.cells[r][c].push_back(x);
      }
      for (std::size_t r = 0; r < block.rows(); ++r) {
        for (std::size_t c = 0; c < block.cols(); ++c) {
          if (block.cells[r][c].empty()) {
            box.empty_cells.push_back(
                "D-class " + std::to_string(box.blocks.size() + 1) + ": cell ("
                + std::to_string(r + 1) + "," + std::to_string(c + 1)
                + ") is empty");
          }
        }
      }
      box.blocks.push_back(std::move(block));
    }
    return box;
  }

  std::string render_text(EggBox const& box) {
    std::ostringstream out;
    out << "egg-box " << to_string(box.reduct) << ": "
        << plural(box.blocks.size(), "D-class") << ", "
        << plural_s(box.names.size(), "element") << ", "
        << plural_s(box.star_count(), "idempotent") << "\n";

    for (std::size_t bi = 0; bi < box.blocks.size(); ++bi) {
      auto const& block = box.blocks[bi];
      out << "\nD-class " << bi + 1 << ": "
          << plural_s(block.members.size(), "element") << ", "
          << plural(block.rows(), "R-class") << " x "
          << plural(block.cols(), "L-class") << "\n";

      std::vector<std::vector<std::string>> text(block.rows());
      std::vector<std::size_t>              width(block.cols(), 0);
      for (std::size_t r = 0; r < block.rows(); ++r) {
        for (std::size_t c = 0; c < block.cols(); ++c) {
          text[r].push_back(cell_text(box, block.cells[r][c]));
          width[c] = std::max(width[c], display_width(text[r][c]));
        }
      }
      std::string rule = "+";
      for (auto w : width) {
        rule += std::string(w + 2, '-') + "+";
      }
      out << rule << "\n";
      for (std::size_t r = 0; r < block.rows(); ++r) {
        out << "|";
        for (std::size_t c = 0; c < block.cols(); ++c) {
          out << " " << text[r][c]
              << std::string(width[c] - display_width(text[r][c]) + 1, ' ')
              << "|";
        }
        out << "\n" << rule << "\n";
      }
    }
    return out.str();
  }

  std::string render_dot(EggBox const& box) {
    std::ostringstream out;
    out << "digraph eggbox_" << to_string(box.reduct) << " {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    out << "  edge [style=invis];\n";
    for (std::size_t bi = 0; bi < box.blocks.size(); ++bi) {
      auto const& block = box.blocks[bi];
      auto node = [bi](std::size_t r, std::size_t c) {
        return "d" + std::to_string(bi) + "_r" + std::to_string(r) + "_c"
               + std::to_string(c);
      };
      out << "  subgraph cluster_d" << bi << " {\n";
      out << "    label=\"D-class " << bi + 1 << "\";\n";
      for (std::size_t r = 0; r < block.rows(); ++r) {
        for (std::size_t c = 0; c < block.cols(); ++c) {
          out << "    " << node(r, c) << " [label=\""
              << dot_escape(cell_text(box, block.cells[r][c])) << "\"];\n";
        }
        out << "    { rank=same;";
        for (std::size_t c = 0; c < block.cols(); ++c) {
          out << " " << node(r, c) << ";";
        }
        out << " }\n";
      }
      for (std::size_t r = 0; r + 1 < block.rows(); ++r) {
        out << "    " << node(r, 0) << " -> " << node(r + 1, 0) << ";\n";
      }
      out << "  }\n";
    }
    out << "}\n";
    return out.str();
  }

  nlohmann::json to_json(EggBox const& box) {
    nlohmann::json blocks = nlohmann::json::array();
    for (auto const& block : box.blocks) {
      nlohmann::json rows = nlohmann::json::array();
      for (auto const& row : block.cells) {
        nlohmann::json cells = nlohmann::json::array();
        for (auto const& cell : row) {
          nlohmann::json entries = nlohmann::json::array();
          for (auto x : cell) {
            entries.push_back({{"element", box.names[x]},
                               {"index", x},
                               {"idempotent", static_cast<bool>(
                                                  box.idempotent[x])}});
          }
          cells.push_back(std::move(entries));
        }
        rows.push_back(std::move(cells));
      }
      blocks.push_back({{"rows", block.rows()},
                        {"cols", block.cols()},
                        {"cells", std::move(rows)}});
    }
    return {{"reduct", to_string(box.reduct)},
            {"d_classes", box.blocks.size()},
            {"stars", box.star_count()},
            {"blocks", std::move(blocks)},
            {"empty_cells", box.empty_cells}};
  }

}  // namespace ans
