#include "ans/canonical.hpp"

#include <algorithm>
#include <tuple>

#include "ans/exception.hpp"

namespace ans {

  namespace {
    void check_in_range(Brandt const& b, BrandtElem x, char const* what) {
      if (x.is_zero() || !b.contains(x)) {
        throw Error(std::string(what) + " " + x.to_string()
                    + " must be a nonzero element of B_"
                    + std::to_string(b.degree()));
      }
    }

    void check_column(std::size_t n, std::size_t k, char const* what) {
      if (k == 0 || k > n) {
        throw Error(std::string(what) + " " + std::to_string(k)
                    + " out of range for n = " + std::to_string(n));
      }
    }

    // An n-support map at n = 1 coincides with <(1,1)->(1,1)>.
    std::optional<CanonicalElem> try_n_support(FMap const& f) {
      std::size_t const n = f.degree();
      if (f.at(0) != 0) {
        return std::nullopt;
      }
      std::optional<std::size_t> column_in;
      std::optional<std::size_t> column_out;
      std::vector<std::size_t>   rows(n, 0);
      for (std::size_t x = 1; x < f.domain_size(); ++x) {
        std::size_t const y = f.at(x);
        if (y == 0) {
          continue;
        }
        std::size_t const i = (x - 1) / n + 1, k = (x - 1) % n + 1;
        std::size_t const p = (y - 1) / n + 1, q = (y - 1) % n + 1;
        if ((column_in && *column_in != k) || (column_out && *column_out != q)) {
          return std::nullopt;
        }
        column_in  = k;
        column_out = q;
        rows[i - 1] = p;
      }
      if (!column_in) {
        return std::nullopt;
      }
      std::vector<std::size_t> sorted = rows;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < n; ++i) {
        if (sorted[i] != i + 1) {
          return std::nullopt;
        }
      }
      return CanonicalElem(n, NSupportMap{*column_in, *column_out, Perm(rows)});
    }

    std::optional<std::size_t> read_number(std::string const& text,
                                           std::size_t&       pos) {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        ++pos;
      }
      if (pos == start || pos - start > 6) {
        return std::nullopt;
      }
      return std::stoul(text.substr(start, pos - start));
    }

    bool expect(std::string const& text, std::size_t& pos, std::string_view s) {
      if (text.compare(pos, s.size(), s) != 0) {
        return false;
      }
      pos += s.size();
      return true;
    }

    // Reads "(i,j)" at pos.
    std::optional<BrandtElem> read_pair(std::string const& text,
                                        std::size_t&       pos) {
      if (!expect(text, pos, "(")) {
        return std::nullopt;
      }
      auto i = read_number(text, pos);
      if (!i || !expect(text, pos, ",")) {
        return std::nullopt;
      }
      auto j = read_number(text, pos);
      if (!j || !expect(text, pos, ")")) {
        return std::nullopt;
      }
      return BrandtElem::pair(*i, *j);
    }
  }  // namespace

  CanonicalElem::CanonicalElem(std::size_t n, variant_type shape)
      : _n(n), _shape(std::move(shape)) {
    Brandt const b(n);
    if (auto const* c = std::get_if<ConstantMap>(&_shape)) {
      check_in_range(b, c->value, "constant value");
    } else if (auto const* s = std::get_if<SingletonMap>(&_shape)) {
      if (n == 1) {
        throw Error("at n = 1 the support-1 map is written (1,1;[1])");
      }
      check_in_range(b, s->source, "singleton source");
      check_in_range(b, s->target, "singleton target");
    } else if (auto const* t = std::get_if<NSupportMap>(&_shape)) {
      check_column(n, t->column_in, "column k");
      check_column(n, t->column_out, "column q");
      if (t->row_action.degree() != n) {
        throw Error("row permutation has degree "
                    + std::to_string(t->row_action.degree())
                    + ", expected " + std::to_string(n));
      }
    }
  }

  std::vector<BrandtElem> CanonicalElem::support() const {
    switch (shape()) {
      case Shape::zero:
        return {};
      case Shape::constant:
        return Brandt(_n).elements();
      case Shape::singleton:
        return {get<SingletonMap>().source};
      case Shape::n_support: {
        std::vector<BrandtElem> out;
        for (std::size_t i = 1; i <= _n; ++i) {
          out.push_back(BrandtElem::pair(i, get<NSupportMap>().column_in));
        }
        return out;
      }
    }
    return {};
  }

  std::vector<BrandtElem> CanonicalElem::image() const {
    switch (shape()) {
      case Shape::zero:
        return {BrandtElem::zero()};
      case Shape::constant:
        return {get<ConstantMap>().value};
      case Shape::singleton:
        return {BrandtElem::zero(), get<SingletonMap>().target};
      case Shape::n_support: {
        std::vector<BrandtElem> out{BrandtElem::zero()};
        for (std::size_t i = 1; i <= _n; ++i) {
          out.push_back(BrandtElem::pair(i, get<NSupportMap>().column_out));
        }
        return out;
      }
    }
    return {};
  }

  std::size_t CanonicalElem::support_size() const noexcept {
    switch (shape()) {
      case Shape::zero:
        return 0;
      case Shape::constant:
        return _n * _n + 1;
      case Shape::singleton:
        return 1;
      case Shape::n_support:
        return _n;
    }
    return 0;
  }

  std::string CanonicalElem::to_string() const {
    switch (shape()) {
      case Shape::zero:
        return "xi_theta";
      case Shape::constant:
        return "xi" + get<ConstantMap>().value.to_string();
      case Shape::singleton:
        return "<" + get<SingletonMap>().source.to_string() + "->"
               + get<SingletonMap>().target.to_string() + ">";
      case Shape::n_support: {
        auto const& t = get<NSupportMap>();
        return "(" + std::to_string(t.column_in) + ","
               + std::to_string(t.column_out) + ";"
               + t.row_action.to_string() + ")";
      }
    }
    return {};
  }

  CanonicalElem CanonicalElem::parse(std::string const& text, std::size_t n) {
    auto fail = [&text]() -> Error {
      return Error("cannot parse canonical element \"" + text + "\"");
    };
    if (text == "xi_theta") {
      return CanonicalElem(n, ZeroMap{});
    }
    std::size_t pos = 0;
    if (expect(text, pos, "xi")) {
      auto value = read_pair(text, pos);
      if (!value || pos != text.size()) {
        throw fail();
      }
      return CanonicalElem(n, ConstantMap{*value});
    }
    if (expect(text, pos, "<")) {
      auto source = read_pair(text, pos);
      if (!source || !expect(text, pos, "->")) {
        throw fail();
      }
      auto target = read_pair(text, pos);
      if (!target || !expect(text, pos, ">") || pos != text.size()) {
        throw fail();
      }
      return CanonicalElem(n, SingletonMap{*source, *target});
    }
    if (expect(text, pos, "(")) {
      auto k = read_number(text, pos);
      if (!k || !expect(text, pos, ",")) {
        throw fail();
      }
      auto q = read_number(text, pos);
      if (!q || !expect(text, pos, ";")) {
        throw fail();
      }
      auto const close = text.find(']', pos);
      if (close == std::string::npos || close + 2 != text.size()
          || text.back() != ')') {
        throw fail();
      }
      Perm sigma = Perm::parse(text.substr(pos, close + 1 - pos));
      return CanonicalElem(n, NSupportMap{*k, *q, sigma});
    }
    throw fail();
  }

  std::optional<CanonicalElem> try_classify(FMap const& f) {
    std::size_t const n    = f.degree();
    std::size_t const size = f.support_size();
    Brandt const      b(n);
    if (size == 0) {
      return CanonicalElem(n, ZeroMap{});
    }
    if (size == b.size()) {
      if (!f.is_constant()) {
        return std::nullopt;
      }
      return CanonicalElem(n, ConstantMap{b.at(f.at(0))});
    }
    if (size == n) {
      return try_n_support(f);
    }
    if (size == 1 && f.at(0) == 0) {
      for (std::size_t x = 1; x < f.domain_size(); ++x) {
        if (f.at(x) != 0) {
          return CanonicalElem(n, SingletonMap{b.at(x), b.at(f.at(x))});
        }
      }
    }
    return std::nullopt;
  }

  CanonicalElem classify(FMap const& f) {
    auto c = try_classify(f);
    if (!c) {
      throw NotAffineElement("map " + f.table_string()
                             + " is not an element of A^+(B_"
                             + std::to_string(f.degree()) + ")");
    }
    return *c;
  }

  FMap render(CanonicalElem const& c) {
    std::size_t const             n = c.degree();
    Brandt const                  b(n);
    std::vector<FMap::value_type> table(b.size(), 0);
    auto idx = [&b](BrandtElem x) {
      return static_cast<FMap::value_type>(b.index_of(x));
    };
    switch (c.shape()) {
      case Shape::zero:
        break;
      case Shape::constant:
        std::fill(table.begin(), table.end(), idx(c.get<ConstantMap>().value));
        break;
      case Shape::singleton: {
        auto const& s       = c.get<SingletonMap>();
        table[idx(s.source)] = idx(s.target);
        break;
      }
      case Shape::n_support: {
        auto const& t = c.get<NSupportMap>();
        for (std::size_t i = 1; i <= n; ++i) {
          table[idx(BrandtElem::pair(i, t.column_in))]
              = idx(BrandtElem::pair(t.row_action(i), t.column_out));
        }
        break;
      }
    }
    return FMap(n, std::move(table));
  }

  std::vector<CanonicalElem> enumerate_canonical(std::size_t n) {
    Brandt const               b(n);
    std::vector<CanonicalElem> out{CanonicalElem(n, ZeroMap{})};
    auto const                 nonzero = [&b] {
      auto all = b.elements();
      all.erase(all.begin());
      return all;
    }();
    for (auto x : nonzero) {
      out.emplace_back(n, ConstantMap{x});
    }
    if (n > 1) {
      for (auto x : nonzero) {
        for (auto y : nonzero) {
          out.emplace_back(n, SingletonMap{x, y});
        }
      }
    }
    auto const perms = enumerate_sn(n);
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t q = 1; q <= n; ++q) {
        for (auto const& sigma : perms) {
          out.emplace_back(n, NSupportMap{k, q, sigma});
        }
      }
    }
    return out;
  }

  bool canonical_less(FMap const& f, FMap const& g) {
    auto cf = try_classify(f);
    auto cg = try_classify(g);
    if (cf && cg) {
      return *cf < *cg;
    }
    if (cf || cg) {
      return static_cast<bool>(cf);
    }
    return f < g;
  }

  void sort_canonical(std::vector<FMap>& maps) {
    using key_type = std::pair<std::optional<CanonicalElem>, FMap>;
    std::vector<key_type> keyed;
    keyed.reserve(maps.size());
    for (auto& f : maps) {
      auto c = try_classify(f);
      keyed.emplace_back(std::move(c), std::move(f));
    }
    std::sort(keyed.begin(),
              keyed.end(),
              [](key_type const& a, key_type const& b) {
                if (a.first && b.first) {
                  return *a.first < *b.first;
                }
                if (a.first || b.first) {
                  return static_cast<bool>(a.first);
                }
                return a.second < b.second;
              });
    for (std::size_t i = 0; i < maps.size(); ++i) {
      maps[i] = std::move(keyed[i].second);
    }
  }

  std::string describe(FMap const& f) {
    if (auto c = try_classify(f)) {
      return c->to_string();
    }
    std::size_t const n = f.degree();
    if (f.at(0) == 0) {
      // phi_sigma sends (i,i) to (i sigma, i sigma)
      std::vector<std::size_t> images(n);
      bool                     ok = true;
      for (std::size_t i = 1; i <= n && ok; ++i) {
        std::size_t const y = f.at(1 + (i - 1) * n + (i - 1));
        ok = y != 0 && (y - 1) / n == (y - 1) % n;
        images[i - 1] = ok ? (y - 1) / n + 1 : 0;
      }
      if (ok) {
        try {
          Perm const sigma(images);
          bool       match = true;
          for (std::size_t i = 1; i <= n && match; ++i) {
            for (std::size_t j = 1; j <= n && match; ++j) {
              match = f.at(1 + (i - 1) * n + (j - 1))
                      == 1 + (sigma(i) - 1) * n + (sigma(j) - 1);
            }
          }
          if (match) {
            return "phi" + sigma.to_string();
          }
        } catch (Error const&) {
        }
      }
    }
    return "map" + f.table_string();
  }

}  // namespace ans
