#include "catch_amalgamated.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "ans/closure.hpp"
#include "ans/eggbox.hpp"
#include "ans/green.hpp"

using namespace ans;

namespace {
  using Cell  = std::vector<std::string>;
  using Block = std::vector<std::vector<Cell>>;

  // The n = 2 egg-box diagrams, transcribed by hand.  "*" marks idempotents;
  // id = [1,2], sigma = [2,1].
  std::vector<Block> figure_additive() {
    std::vector<Block> out;
    out.push_back({{{"*xi_theta"}}});
    out.push_back({{{"*xi(1,1)"}, {"xi(1,2)"}}, {{"xi(2,1)"}, {"*xi(2,2)"}}});
    for (std::string k : {"1", "2"}) {
      for (std::string s : {"[1,2]", "[2,1]"}) {
        out.push_back({{{"(" + k + ",1;" + s + ")"},
                        {"(" + k + ",2;" + s + ")"}}});
      }
    }
    for (std::string src : {"(1,1)", "(1,2)", "(2,1)", "(2,2)"}) {
      auto sis = [&](std::string const& dst) {
        return "<" + src + "->" + dst + ">";
      };
      out.push_back({{{"*" + sis("(1,1)")}, {sis("(1,2)")}},
                     {{sis("(2,1)")}, {"*" + sis("(2,2)")}}});
    }
    return out;
  }

  std::vector<Block> figure_multiplicative() {
    std::vector<Block> out;
    out.push_back({{{"*xi_theta"}, {"*xi(1,1)"}, {"*xi(1,2)"},
                    {"*xi(2,1)"}, {"*xi(2,2)"}}});
    out.push_back({{{"(1,1;[2,1])", "*(1,1;[1,2])"},
                    {"(1,2;[1,2])", "(1,2;[2,1])"}},
                   {{"(2,1;[1,2])", "(2,1;[2,1])"},
                    {"(2,2;[2,1])", "*(2,2;[1,2])"}}});
    Block                    singles;
    std::vector<std::string> pts = {"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
    for (auto const& src : pts) {
      std::vector<Cell> row;
      for (auto const& dst : pts) {
        row.push_back({(src == dst ? "*" : "") + ("<" + src + "->" + dst
                                                  + ">")});
      }
      singles.push_back(row);
    }
    out.push_back(singles);
    return out;
  }

  // D-class as (set of row contents, set of column contents), order-free.
  using Shape = std::pair<std::set<std::set<std::string>>,
                          std::set<std::set<std::string>>>;

  Shape shape_of(Block const& b) {
    Shape s;
    std::size_t const cols = b.front().size();
    for (auto const& row : b) {
      std::set<std::string> r;
      for (auto const& cell : row) {
        r.insert(cell.begin(), cell.end());
      }
      s.first.insert(r);
    }
    for (std::size_t c = 0; c < cols; ++c) {
      std::set<std::string> col;
      for (auto const& row : b) {
        col.insert(row[c].begin(), row[c].end());
      }
      s.second.insert(col);
    }
    return s;
  }

  std::vector<Block> computed(EggBox const& box) {
    std::vector<Block> out;
    for (auto const& blk : box.blocks) {
      Block b;
      for (auto const& row : blk.cells) {
        std::vector<Cell> r;
        for (auto const& cell : row) {
          Cell c;
          for (auto x : cell) {
            c.push_back((box.idempotent[x] ? "*" : "") + box.names[x]);
          }
          r.push_back(c);
        }
        b.push_back(r);
      }
      out.push_back(b);
    }
    return out;
  }

  std::set<Shape> shapes(std::vector<Block> const& blocks) {
    std::set<Shape> out;
    for (auto const& b : blocks) {
      out.insert(shape_of(b));
    }
    return out;
  }

  EggBox eggbox(std::size_t n, Reduct r) {
    auto const ns = affine_near_semiring(n);
    return make_eggbox(r, ns.names(), green_brute(ns.reduct(r)));
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), {}};
  }

  // Recursive-descent check of the DOT language (graph, subgraph, node,
  // edge and attribute statements; IDs, numerals and quoted strings).
  class DotParser {
   public:
    explicit DotParser(std::string text) : _text(std::move(text)) {}

    bool parse() {
      try {
        tokenize();
        graph();
        return _pos == _tokens.size();
      } catch (std::runtime_error const&) {
        return false;
      }
    }

    std::size_t clusters = 0;
    std::size_t nodes    = 0;

   private:
    enum class Kind { id, punct };
    struct Token {
      Kind        kind;
      std::string text;
    };

    void tokenize() {
      std::size_t i = 0;
      while (i < _text.size()) {
        char const c = _text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
        } else if (c == '"') {
          std::string s;
          ++i;
          while (i < _text.size() && _text[i] != '"') {
            if (_text[i] == '\\' && i + 1 < _text.size()) {
              ++i;
            }
            s += _text[i++];
          }
          if (i == _text.size()) {
            throw std::runtime_error("unterminated string");
          }
          ++i;
          _tokens.push_back({Kind::id, s});
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_'
                   || c == '.') {
          std::string s;
          while (i < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[i]))
                     || _text[i] == '_' || _text[i] == '.')) {
            s += _text[i++];
          }
          bool const numeral = std::all_of(s.begin(), s.end(), [](char x) {
            return std::isdigit(static_cast<unsigned char>(x)) || x == '.';
          });
          if (!numeral && std::isdigit(static_cast<unsigned char>(s[0]))) {
            throw std::runtime_error("bad identifier " + s);
          }
          _tokens.push_back({Kind::id, s});
        } else if (c == '-' && i + 1 < _text.size() && _text[i + 1] == '>') {
          _tokens.push_back({Kind::punct, "->"});
          i += 2;
        } else if (std::string("{}[];,=").find(c) != std::string::npos) {
          _tokens.push_back({Kind::punct, std::string(1, c)});
          ++i;
        } else {
          throw std::runtime_error(std::string("stray character ") + c);
        }
      }
    }

    bool at(std::string const& t) const {
      return _pos < _tokens.size() && _tokens[_pos].text == t
             && (_tokens[_pos].kind == Kind::punct || t == "subgraph"
                 || t == "digraph" || t == "graph" || t == "node"
                 || t == "edge");
    }
    bool at_id() const {
      return _pos < _tokens.size() && _tokens[_pos].kind == Kind::id;
    }
    void expect(std::string const& t) {
      if (!at(t)) {
        throw std::runtime_error("expected " + t);
      }
      ++_pos;
    }
    std::string id() {
      if (!at_id()) {
        throw std::runtime_error("expected identifier");
      }
      return _tokens[_pos++].text;
    }

    void graph() {
      if (at("digraph")) {
        ++_pos;
      } else {
        expect("graph");
      }
      if (at_id()) {
        id();
      }
      expect("{");
      stmt_list();
      expect("}");
    }

    void stmt_list() {
      while (!at("}")) {
        if (_pos >= _tokens.size()) {
          throw std::runtime_error("unexpected end");
        }
        stmt();
        if (at(";")) {
          ++_pos;
        }
      }
    }

    void attr_list() {
      while (at("[")) {
        ++_pos;
        while (!at("]")) {
          id();
          expect("=");
          id();
          if (at(",") || at(";")) {
            ++_pos;
          }
        }
        expect("]");
      }
    }

    void subgraph() {
      if (at("subgraph")) {
        ++_pos;
        if (at_id()) {
          if (_tokens[_pos].text.rfind("cluster", 0) == 0) {
            ++clusters;
          }
          id();
        }
      }
      expect("{");
      stmt_list();
      expect("}");
    }

    void stmt() {
      if (at("graph") || at("node") || at("edge")) {
        ++_pos;
        attr_list();
        return;
      }
      if (at("subgraph") || at("{")) {
        subgraph();
        edge_rhs();
        return;
      }
      id();
      if (at("=")) {
        ++_pos;
        id();
        return;
      }
      bool const edge = at("->");
      edge_rhs();
      if (!edge && at("[")) {
        ++nodes;
      }
      attr_list();
    }

    void edge_rhs() {
      while (at("->")) {
        ++_pos;
        if (at("subgraph") || at("{")) {
          subgraph();
        } else {
          id();
        }
      }
    }

    std::string        _text;
    std::vector<Token> _tokens;
    std::size_t        _pos = 0;
  };
}  // namespace

TEST_CASE("n = 2 additive egg-box matches the hand-drawn diagram", "[eggbox]") {
  auto const box = eggbox(2, Reduct::additive);
  REQUIRE(box.blocks.size() == 10);
  REQUIRE(box.star_count() == 11);
  REQUIRE(box.empty_cells.empty());
  REQUIRE(shapes(computed(box)) == shapes(figure_additive()));
  // the constants block: a 2 x 2 grid, with xi_theta alone before it
  REQUIRE(box.blocks[0].members.size() == 1);
  REQUIRE(box.blocks[1].rows() == 2);
  REQUIRE(box.blocks[1].cols() == 2);
}

TEST_CASE("n = 2 multiplicative egg-box matches the hand-drawn diagram", "[eggbox]") {
  auto const box = eggbox(2, Reduct::multiplicative);
  REQUIRE(box.blocks.size() == 3);
  REQUIRE(box.star_count() == 11);
  std::vector<std::size_t> sizes;
  for (auto const& b : box.blocks) {
    sizes.push_back(b.members.size());
  }
  std::sort(sizes.begin(), sizes.end());
  REQUIRE(sizes == std::vector<std::size_t>{5, 8, 16});
  REQUIRE(shapes(computed(box)) == shapes(figure_multiplicative()));
}

TEST_CASE("starred elements are exactly those of the hand-drawn diagrams", "[eggbox]") {
  for (auto r : {Reduct::additive, Reduct::multiplicative}) {
    auto const figure = r == Reduct::additive ? figure_additive()
                                              : figure_multiplicative();
    std::set<std::string> expected, got;
    for (auto const& b : figure) {
      for (auto const& row : b) {
        for (auto const& cell : row) {
          for (auto const& s : cell) {
            if (s.front() == '*') {
              expected.insert(s.substr(1));
            }
          }
        }
      }
    }
    auto const box = eggbox(2, r);
    for (std::size_t x = 0; x < box.names.size(); ++x) {
      if (box.idempotent[x]) {
        got.insert(box.names[x]);
      }
    }
    REQUIRE(expected.size() == 11);
    REQUIRE(got == expected);
  }
}

TEST_CASE("text rendering matches the golden files", "[eggbox][golden]") {
  auto const add = render_text(eggbox(2, Reduct::additive));
  auto const mul = render_text(eggbox(2, Reduct::multiplicative));
  REQUIRE(add == read_file(ANS_GOLDEN_DIR "/eggbox_b2_additive.txt"));
  REQUIRE(mul == read_file(ANS_GOLDEN_DIR "/eggbox_b2_multiplicative.txt"));
  REQUIRE(std::count(add.begin(), add.end(), '*') == 11);
  REQUIRE(std::count(mul.begin(), mul.end(), '*') == 11);
}

TEST_CASE("n = 1: three singleton blocks, all starred", "[eggbox]") {
  auto const box = eggbox(1, Reduct::additive);
  REQUIRE(box.blocks.size() == 3);
  for (auto const& b : box.blocks) {
    REQUIRE(b.members.size() == 1);
    REQUIRE(box.idempotent[b.members.front()]);
  }
  auto const text = render_text(box);
  REQUIRE(std::count(text.begin(), text.end(), '*') == 3);
}

TEST_CASE("DOT output parses and has one cluster per D-class", "[eggbox]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto r : {Reduct::additive, Reduct::multiplicative}) {
      auto const box = eggbox(n, r);
      DotParser  p(render_dot(box));
      REQUIRE(p.parse());
      REQUIRE(p.clusters == box.blocks.size());
      std::size_t cells = 0;
      for (auto const& b : box.blocks) {
        cells += b.rows() * b.cols();
      }
      REQUIRE(p.nodes == cells);
    }
  }
}

TEST_CASE("the DOT checker rejects malformed input", "[eggbox]") {
  REQUIRE(DotParser("digraph g { a -> b; }").parse());
  REQUIRE(DotParser("digraph { subgraph cluster_x { a [label=\"q\\\"\"]; } }")
              .parse());
  REQUIRE_FALSE(DotParser("digraph g { a -> ; }").parse());
  REQUIRE_FALSE(DotParser("digraph g { a [label=] }").parse());
  REQUIRE_FALSE(DotParser("digraph g { a").parse());
  REQUIRE_FALSE(DotParser("digraph g { a [label=\"x] }").parse());
}

TEST_CASE("empty cells are reported", "[eggbox]") {
  GreenStructure gs;
  gs.r          = Partition::from_labels(std::vector<int>{0, 1});
  gs.l          = Partition::from_labels(std::vector<int>{0, 1});
  gs.d          = Partition::from_labels(std::vector<int>{0, 0});
  gs.j          = gs.d;
  gs.h          = gs.r;
  gs.idempotent = {true, false};
  gs.regular    = {true, true};
  auto const box = make_eggbox(Reduct::additive, {"a", "b"}, gs);
  REQUIRE(box.blocks.size() == 1);
  REQUIRE(box.blocks[0].rows() == 2);
  REQUIRE(box.empty_cells.size() == 2);
  REQUIRE(box.empty_cells[0] == "D-class 1: cell (1,2) is empty");
  auto const text = render_text(box);
  REQUIRE(text.find("| *a |") != std::string::npos);
}

TEST_CASE("egg-box JSON", "[eggbox]") {
  auto const doc = to_json(eggbox(2, Reduct::multiplicative));
  REQUIRE(doc.at("reduct") == "multiplicative");
  REQUIRE(doc.at("d_classes") == 3);
  REQUIRE(doc.at("stars") == 11);
  REQUIRE(doc.at("blocks").size() == 3);
  REQUIRE(doc.at("empty_cells").empty());
  auto const& first = doc.at("blocks")[0];
  REQUIRE(first.at("rows") == 1);
  REQUIRE(first.at("cols") == 5);
  REQUIRE(first.at("cells")[0][0][0].at("element") == "xi_theta");
  REQUIRE(first.at("cells")[0][0][0].at("idempotent") == true);
}
