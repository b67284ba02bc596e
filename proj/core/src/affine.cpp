#include "ans/affine.hpp"

#include <algorithm>
#include <unordered_set>

#include "ans/canonical.hpp"
#include "ans/exception.hpp"
#include "ans/formulas.hpp"

namespace ans {

  namespace {
    std::uint64_t expected_size(std::size_t n, GeneratorKind kind) {
      auto const t = counts(n);
      switch (kind) {
        case GeneratorKind::end:
          return t.end_count;
        case GeneratorKind::aut:
          return t.aut_count;
        case GeneratorKind::aff:
          return t.aff_count;
        case GeneratorKind::const_all:
          return n * n + 1;
      }
      return 0;
    }
  }  // namespace

  std::string to_string(GeneratorKind kind) {
    switch (kind) {
      case GeneratorKind::end:
        return "End";
      case GeneratorKind::aut:
        return "Aut";
      case GeneratorKind::aff:
        return "Aff";
      case GeneratorKind::const_all:
        return "ConstAll";
    }
    return "";
  }

  GeneratorKind generator_kind_from_string(std::string const& name) {
    for (auto kind : {GeneratorKind::end,
                      GeneratorKind::aut,
                      GeneratorKind::aff,
                      GeneratorKind::const_all}) {
      std::string lower = to_string(kind);
      std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
      if (name == to_string(kind) || name == lower) {
        return kind;
      }
    }
    throw Error("unknown generator kind \"" + name
                + "\" (expected End, Aut, Aff or ConstAll)");
  }

  GeneratorSet::GeneratorSet(std::size_t       n,
                             GeneratorKind     kind,
                             std::vector<FMap> members)
      : _n(n), _kind(kind), _members(std::move(members)) {
    for (auto const& f : _members) {
      if (f.degree() != n) {
        throw Error("generator of degree " + std::to_string(f.degree())
                    + " in a set for n = " + std::to_string(n));
      }
    }
    for (std::size_t i = 1; i < _members.size(); ++i) {
      if (!canonical_less(_members[i - 1], _members[i])) {
        throw Error("generator set members must be distinct and in "
                    "canonical order");
      }
    }
    auto const expected = expected_size(n, kind);
    if (_members.size() != expected) {
      throw Error(to_string(kind) + "(B_" + std::to_string(n) + ") has "
                  + std::to_string(_members.size()) + " members, expected "
                  + std::to_string(expected));
    }
  }

  FMap phi_sigma(Perm const& sigma) {
    std::size_t const             n = sigma.degree();
    Brandt const                  b(n);
    std::vector<FMap::value_type> table(b.size(), 0);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        table[b.index_of(BrandtElem::pair(i, j))]
            = static_cast<FMap::value_type>(
                b.index_of(BrandtElem::pair(sigma(i), sigma(j))));
      }
    }
    return FMap(n, std::move(table));
  }

  bool is_endomorphism(FMap const& f) {
    Brandt const b(f.degree());
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        if (f.at(b.add_index(x, y)) != b.add_index(f.at(x), f.at(y))) {
          return false;
        }
      }
    }
    return true;
  }

  GeneratorSet enumerate_aut(std::size_t n) {
    std::vector<FMap> members;
    for (auto const& sigma : enumerate_sn(n)) {
      members.push_back(phi_sigma(sigma));
    }
    sort_canonical(members);
    return GeneratorSet(n, GeneratorKind::aut, std::move(members));
  }

  GeneratorSet enumerate_end(std::size_t n) {
    std::vector<FMap> members;
    for (auto x : Brandt(n).idempotents()) {
      members.push_back(FMap::constant(n, x));
    }
    auto const aut = enumerate_aut(n);
    members.insert(members.end(), aut.members().begin(), aut.members().end());
    sort_canonical(members);
    return GeneratorSet(n, GeneratorKind::end, std::move(members));
  }

  GeneratorSet enumerate_constants(std::size_t n) {
    std::vector<FMap> members;
    for (auto x : Brandt(n).elements()) {
      members.push_back(FMap::constant(n, x));
    }
    return GeneratorSet(n, GeneratorKind::const_all, std::move(members));
  }

  GeneratorSet enumerate_aff(std::size_t n) {
    auto const                               ends   = enumerate_end(n);
    auto const                               consts = enumerate_constants(n);
    std::unordered_set<FMap, FMap::Hash>     seen;
    std::vector<FMap>                        members;
    for (auto const& g : ends.members()) {
      for (auto const& xi : consts.members()) {
        FMap sum = g + xi;
        if (seen.insert(sum).second) {
          members.push_back(std::move(sum));
        }
      }
    }
    sort_canonical(members);
    return GeneratorSet(n, GeneratorKind::aff, std::move(members));
  }

  GeneratorSet enumerate_generators(std::size_t n, GeneratorKind kind) {
    switch (kind) {
      case GeneratorKind::end:
        return enumerate_end(n);
      case GeneratorKind::aut:
        return enumerate_aut(n);
      case GeneratorKind::aff:
        return enumerate_aff(n);
      case GeneratorKind::const_all:
        return enumerate_constants(n);
    }
    throw Error("unknown generator kind");
  }

  FMap triple_to_map(std::size_t k, std::size_t q, Perm const& sigma) {
    std::size_t const n = sigma.degree();
    if (k == 0 || k > n || q == 0 || q > n) {
      throw Error("triple (" + std::to_string(k) + "," + std::to_string(q)
                  + ";" + sigma.to_string() + ") out of range");
    }
    return phi_sigma(sigma) + FMap::constant(n, BrandtElem::pair(sigma(k), q));
  }

  Triple map_to_triple(FMap const& f) {
    auto c = try_classify(f);
    if (!c || c->shape() != Shape::n_support) {
      throw Error("map " + f.table_string()
                  + " is not an n-support element of A^+(B_"
                  + std::to_string(f.degree()) + ")");
    }
    auto const& t = c->get<NSupportMap>();
    return Triple{t.column_in, t.column_out, t.row_action};
  }

}  // namespace ans
