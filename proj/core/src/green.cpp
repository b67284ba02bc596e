#include "ans/green.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

#include "ans/exception.hpp"
#include "parallel.hpp"

namespace ans {

  namespace {
    using bitset_type = std::vector<std::uint64_t>;

    std::size_t words_for(std::size_t n) {
      return (n + 63) / 64;
    }

    void set_bit(bitset_type& b, std::size_t i) {
      b[i / 64] |= std::uint64_t(1) << (i % 64);
    }

    bool test_bit(bitset_type const& b, std::size_t i) {
      return (b[i / 64] >> (i % 64)) & 1;
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          _parent[std::max(x, y)] = std::min(x, y);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace

  std::string to_string(GreenRelation rel) {
    switch (rel) {
      case GreenRelation::R:
        return "R";
      case GreenRelation::L:
        return "L";
      case GreenRelation::D:
        return "D";
      case GreenRelation::J:
        return "J";
      case GreenRelation::H:
        return "H";
    }
    return "";
  }

  GreenRelation green_relation_from_string(std::string const& name) {
    for (auto rel : {GreenRelation::R,
                     GreenRelation::L,
                     GreenRelation::D,
                     GreenRelation::J,
                     GreenRelation::H}) {
      if (name == to_string(rel)) {
        return rel;
      }
    }
    throw Error("unknown Green's relation \"" + name + "\"");
  }

  bool Partition::refines(Partition const& coarser) const {
    if (_class_of.size() != coarser._class_of.size()) {
      return false;
    }
    for (auto const& cls : _classes) {
      for (auto x : cls) {
        if (!coarser.related(cls.front(), x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> Partition::class_sizes() const {
    std::vector<std::size_t> out;
    for (auto const& cls : _classes) {
      out.push_back(cls.size());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Partition const& GreenStructure::partition(GreenRelation rel) const {
    switch (rel) {
      case GreenRelation::R:
        return r;
      case GreenRelation::L:
        return l;
      case GreenRelation::D:
        return d;
      case GreenRelation::J:
        return j;
      case GreenRelation::H:
        return h;
    }
    throw Error("unknown Green's relation");
  }

  std::vector<element_index> idempotents(FiniteSemigroup const& sg) {
    std::vector<element_index> out;
    for (element_index x = 0; x < sg.size(); ++x) {
      if (sg.product(x, x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<element_index> regular_elements(FiniteSemigroup const& sg) {
    std::vector<element_index> out;
    for (element_index x = 0; x < sg.size(); ++x) {
      for (element_index y = 0; y < sg.size(); ++y) {
        if (sg.product(sg.product(x, y), x) == x) {
          out.push_back(x);
          break;
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> eventual_regularity(FiniteSemigroup const& sg) {
    std::vector<bool> regular(sg.size(), false);
    for (auto x : regular_elements(sg)) {
      regular[x] = true;
    }
    std::vector<std::size_t> out(sg.size(), 0);
    for (element_index x = 0; x < sg.size(); ++x) {
      element_index power = x;
      for (std::size_t m = 1; m <= sg.size(); ++m) {
        if (regular[power]) {
          out[x] = m;
          break;
        }
        power = sg.product(power, x);
      }
    }
    return out;
  }

  GreenStructure green_brute(FiniteSemigroup const& sg, std::size_t jobs) {
    std::size_t const        size  = sg.size();
    std::size_t const        words = words_for(size);
    std::vector<bitset_type> right(size, bitset_type(words, 0));
    std::vector<bitset_type> left(size, bitset_type(words, 0));
    std::vector<bitset_type> two_sided(size, bitset_type(words, 0));

    detail::parallel_chunks(
        size, jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
          for (std::size_t a = begin; a < end; ++a) {
            set_bit(right[a], a);
            set_bit(left[a], a);
            for (std::size_t s = 0; s < size; ++s) {
              set_bit(right[a], sg.product(a, s));
              set_bit(left[a], sg.product(s, a));
            }
          }
        });
    detail::parallel_chunks(
        size, jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
          for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t x = 0; x < size; ++x) {
              if (test_bit(right[a], x)) {
                for (std::size_t w = 0; w < words; ++w) {
                  two_sided[a][w] |= left[x][w];
                }
              }
            }
          }
        });

    GreenStructure gs;
    gs.r = Partition::from_labels(right);
    gs.l = Partition::from_labels(left);
    gs.j = Partition::from_labels(two_sided);

    UnionFind uf(size);
    for (auto const* p : {&gs.r, &gs.l}) {
      for (auto const& cls : p->classes()) {
        for (auto x : cls) {
          uf.unite(cls.front(), x);
        }
      }
    }
    std::vector<std::size_t> roots(size);
    for (std::size_t x = 0; x < size; ++x) {
      roots[x] = uf.find(x);
    }
    gs.d = Partition::from_labels(roots);
    if (!(gs.d == gs.j)) {
      throw Error("Green's relations D and J differ; the table is not a "
                  "finite semigroup");
    }

    std::vector<std::pair<std::size_t, std::size_t>> rl(size);
    for (std::size_t x = 0; x < size; ++x) {
      rl[x] = {gs.r.class_of(x), gs.l.class_of(x)};
    }
    gs.h = Partition::from_labels(rl);

    gs.idempotent.assign(size, false);
    for (auto x : idempotents(sg)) {
      gs.idempotent[x] = true;
    }
    gs.regular.assign(size, false);
    for (auto x : regular_elements(sg)) {
      gs.regular[x] = true;
    }
    gs.eventual_index = eventual_regularity(sg);
    return gs;
  }

  CountsRecord class_counts(GreenStructure const& gs) {
    CountsRecord c;
    c.r           = gs.r.size();
    c.l           = gs.l.size();
    c.d           = gs.d.size();
    c.j           = gs.j.size();
    c.h           = gs.h.size();
    c.idempotents = static_cast<std::size_t>(
        std::count(gs.idempotent.begin(), gs.idempotent.end(), true));
    c.regular = static_cast<std::size_t>(
        std::count(gs.regular.begin(), gs.regular.end(), true));
    for (auto rel : {GreenRelation::R,
                     GreenRelation::L,
                     GreenRelation::D,
                     GreenRelation::J,
                     GreenRelation::H}) {
      c.class_sizes[to_string(rel)] = gs.partition(rel).class_sizes();
    }
    return c;
  }

}  // namespace ans
