#include "ans/fmap.hpp"

#include <algorithm>

#include "ans/exception.hpp"

namespace ans {

  namespace {
    void check_same_degree(FMap const& f, FMap const& g, char const* what) {
      if (f.degree() != g.degree()) {
        throw Error(std::string("cannot ") + what + " maps of degree "
                    + std::to_string(f.degree()) + " and "
                    + std::to_string(g.degree()));
      }
    }
  }  // namespace

  FMap::FMap(std::size_t n, std::vector<value_type> table)
      : _n(n), _table(std::move(table)) {
    Brandt const b(n);
    if (_table.size() != b.size()) {
      throw Error("map table for B_" + std::to_string(n) + " must have "
                  + std::to_string(b.size()) + " entries, got "
                  + std::to_string(_table.size()));
    }
    for (auto x : _table) {
      if (x >= b.size()) {
        throw Error("map table entry " + std::to_string(x)
                    + " out of range for B_" + std::to_string(n));
      }
    }
  }

  FMap FMap::constant(std::size_t n, BrandtElem value) {
    Brandt const b(n);
    return FMap(n,
                std::vector<value_type>(
                    b.size(), static_cast<value_type>(b.index_of(value))));
  }

  FMap FMap::identity(std::size_t n) {
    Brandt const            b(n);
    std::vector<value_type> table(b.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      table[i] = static_cast<value_type>(i);
    }
    return FMap(n, std::move(table));
  }

  BrandtElem FMap::operator()(BrandtElem x) const {
    Brandt const b(_n);
    return b.at(_table[b.index_of(x)]);
  }

  std::vector<BrandtElem> FMap::support() const {
    Brandt const            b(_n);
    std::vector<BrandtElem> out;
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (_table[i] != 0) {
        out.push_back(b.at(i));
      }
    }
    return out;
  }

  std::size_t FMap::support_size() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        _table.begin(), _table.end(), [](value_type x) { return x != 0; }));
  }

  std::vector<BrandtElem> FMap::image() const {
    Brandt const      b(_n);
    std::vector<bool> hit(b.size(), false);
    for (auto x : _table) {
      hit[x] = true;
    }
    std::vector<BrandtElem> out;
    for (std::size_t i = 0; i < hit.size(); ++i) {
      if (hit[i]) {
        out.push_back(b.at(i));
      }
    }
    return out;
  }

  bool FMap::is_constant() const noexcept {
    return std::adjacent_find(_table.begin(),
                              _table.end(),
                              std::not_equal_to<>())
           == _table.end();
  }

  std::optional<std::size_t> FMap::image_invariant() const {
    std::optional<std::size_t> q;
    for (auto x : _table) {
      if (x == 0) {
        continue;
      }
      std::size_t const col = (x - 1) % _n + 1;
      if (q && *q != col) {
        return std::nullopt;
      }
      q = col;
    }
    return q;
  }

  std::string FMap::table_string() const {
    Brandt const b(_n);
    std::string  out = "[";
    for (std::size_t i = 0; i < _table.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += b.at(_table[i]).to_string();
    }
    return out + "]";
  }

  std::size_t FMap::Hash::operator()(FMap const& f) const noexcept {
    // FNV-1a over the table
    std::size_t h = 1469598103934665603ULL ^ f.degree();
    for (auto x : f.table()) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

  BrandtElem eval(FMap const& f, BrandtElem x) {
    return f(x);
  }

  FMap pointwise_add(FMap const& f, FMap const& g) {
    check_same_degree(f, g, "add");
    Brandt const                  b(f.degree());
    std::vector<FMap::value_type> table(f.domain_size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      table[i] = static_cast<FMap::value_type>(b.add_index(f.at(i), g.at(i)));
    }
    return FMap::unchecked(f.degree(), std::move(table));
  }

  FMap compose(FMap const& f, FMap const& g) {
    check_same_degree(f, g, "compose");
    std::vector<FMap::value_type> table(f.domain_size());
    for (std::size_t i = 0; i < table.size(); ++i) {
      table[i] = g.at(f.at(i));
    }
    return FMap::unchecked(f.degree(), std::move(table));
  }

}  // namespace ans
