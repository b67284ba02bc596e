#include "ans/json-io.hpp"

#include <fstream>

#include "ans/canonical.hpp"
#include "ans/config.hpp"
#include "ans/exception.hpp"

namespace ans {

  using nlohmann::json;

  namespace {
    json table_to_json(CayleyTable const& t) {
      json rows = json::array();
      for (std::size_t a = 0; a < t.size(); ++a) {
        rows.push_back(std::vector<element_index>(t.row(a), t.row(a) + t.size()));
      }
      return rows;
    }

    CayleyTable table_from_json(json const& rows, std::size_t size) {
      if (!rows.is_array() || rows.size() != size) {
        throw Error("Cayley table must be a " + std::to_string(size) + "x"
                    + std::to_string(size) + " array");
      }
      CayleyTable t(size);
      for (std::size_t a = 0; a < size; ++a) {
        auto const& row = rows[a];
        if (!row.is_array() || row.size() != size) {
          throw Error("Cayley table row " + std::to_string(a)
                      + " has the wrong length");
        }
        for (std::size_t b = 0; b < size; ++b) {
          auto const v = row[b].get<std::int64_t>();
          if (v < 0 || static_cast<std::size_t>(v) >= size) {
            throw Error("Cayley table entry out of range at ("
                        + std::to_string(a) + "," + std::to_string(b) + ")");
          }
          t.set(a, b, static_cast<element_index>(v));
        }
      }
      return t;
    }

    json partition_to_json(Partition const& p) {
      return p.classes();
    }

    Partition partition_from_json(json const& doc, std::size_t size) {
      std::vector<std::size_t> labels(size, size);
      std::size_t              label = 0;
      for (auto const& cls : doc) {
        for (auto const& x : cls) {
          auto const i = x.get<std::size_t>();
          if (i >= size || labels[i] != size) {
            throw Error("malformed partition in Green's structure");
          }
          labels[i] = label;
        }
        ++label;
      }
      if (std::find(labels.begin(), labels.end(), size) != labels.end()) {
        throw Error("partition does not cover every element");
      }
      return Partition::from_labels(labels);
    }
  }  // namespace

  json to_json(GeneratorSet const& gens) {
    json members = json::array();
    for (auto const& f : gens.members()) {
      members.push_back(describe(f));
    }
    return {{"n", gens.degree()},
            {"kind", to_string(gens.kind())},
            {"count", gens.size()},
            {"members", members}};
  }

  json to_json(NearSemiring const& ns) {
    return {{"format_version", format_version},
            {"n", ns.n},
            {"count", ns.size()},
            {"elements", ns.names()},
            {"add_table", table_to_json(ns.add_table)},
            {"mul_table", table_to_json(ns.mul_table)}};
  }

  NearSemiring near_semiring_from_json(json const& doc) {
    try {
      if (doc.contains("format_version")
          && doc.at("format_version").get<int>() != format_version) {
        throw Error("unsupported format_version "
                    + doc.at("format_version").dump());
      }
      NearSemiring ns;
      ns.n              = doc.at("n").get<std::size_t>();
      auto const& names = doc.at("elements");
      if (doc.at("count").get<std::size_t>() != names.size()) {
        throw Error("count does not match the number of elements");
      }
      for (auto const& name : names) {
        ns.elements.push_back(
            render(CanonicalElem::parse(name.get<std::string>(), ns.n)));
      }
      ns.add_table = table_from_json(doc.at("add_table"), ns.size());
      ns.mul_table = table_from_json(doc.at("mul_table"), ns.size());
      return ns;
    } catch (json::exception const& e) {
      throw Error(std::string("malformed near-semiring JSON: ") + e.what());
    }
  }

  json to_json(GreenStructure const& gs) {
    json doc;
    for (auto rel : {GreenRelation::R,
                     GreenRelation::L,
                     GreenRelation::D,
                     GreenRelation::J,
                     GreenRelation::H}) {
      doc[to_string(rel)] = partition_to_json(gs.partition(rel));
    }
    std::vector<element_index> idem, reg;
    for (std::size_t x = 0; x < gs.idempotent.size(); ++x) {
      if (gs.idempotent[x]) {
        idem.push_back(static_cast<element_index>(x));
      }
      if (gs.regular[x]) {
        reg.push_back(static_cast<element_index>(x));
      }
    }
    doc["idempotents"]    = idem;
    doc["regular"]        = reg;
    doc["eventual_index"] = gs.eventual_index;
    return doc;
  }

  GreenStructure green_structure_from_json(json const& doc) {
    try {
      GreenStructure gs;
      gs.eventual_index
          = doc.at("eventual_index").get<std::vector<std::size_t>>();
      std::size_t const size = gs.eventual_index.size();
      gs.r                   = partition_from_json(doc.at("R"), size);
      gs.l                   = partition_from_json(doc.at("L"), size);
      gs.d                   = partition_from_json(doc.at("D"), size);
      gs.j                   = partition_from_json(doc.at("J"), size);
      gs.h                   = partition_from_json(doc.at("H"), size);
      gs.idempotent.assign(size, false);
      gs.regular.assign(size, false);
      for (auto x : doc.at("idempotents").get<std::vector<std::size_t>>()) {
        gs.idempotent.at(x) = true;
      }
      for (auto x : doc.at("regular").get<std::vector<std::size_t>>()) {
        gs.regular.at(x) = true;
      }
      return gs;
    } catch (json::exception const& e) {
      throw Error(std::string("malformed Green's structure JSON: ") + e.what());
    } catch (std::out_of_range const& e) {
      throw Error(std::string("malformed Green's structure JSON: ") + e.what());
    }
  }

  json to_json(CountsTable const& t) {
    return {{"n", t.n},
            {"end_count", t.end_count},
            {"aut_count", t.aut_count},
            {"aff_count", t.aff_count},
            {"a_plus_total", t.a_plus_total},
            {"breakup",
             {{"full", t.breakup.full},
              {"n_support", t.breakup.n_support},
              {"singleton", t.breakup.singleton},
              {"zero", t.breakup.zero}}},
            {"additive",
             {{"r", t.additive.r},
              {"l", t.additive.l},
              {"d", t.additive.d},
              {"h", t.additive.h},
              {"idempotents", t.additive.idempotents},
              {"regular", t.additive.regular}}},
            {"multiplicative",
             {{"r", t.multiplicative.r},
              {"l", t.multiplicative.l},
              {"d", t.multiplicative.d},
              {"h", t.multiplicative.h},
              {"idempotents", t.multiplicative.idempotents},
              {"regular", t.multiplicative.regular}}}};
  }

  std::string dump(json const& doc) {
    return doc.dump(2) + "\n";
  }

  void write_json(std::filesystem::path const& path, json const& doc) {
    if (path.has_parent_path()) {
      std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("cannot write " + path.string());
    }
    out << dump(doc);
    if (!out) {
      throw Error("error writing " + path.string());
    }
  }

  json read_json(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read " + path.string());
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw Error("cannot parse " + path.string() + ": " + e.what());
    }
  }

}  // namespace ans
