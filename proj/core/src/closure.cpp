#include "ans/closure.hpp"

#include <random>
#include <unordered_map>
#include <unordered_set>

#include "ans/canonical.hpp"
#include "ans/exception.hpp"
#include "parallel.hpp"

namespace ans {

  namespace {
    using index_map = std::unordered_map<FMap, element_index, FMap::Hash>;

    index_map make_index(std::vector<FMap> const& elements) {
      index_map out;
      out.reserve(elements.size() * 2);
      for (std::size_t i = 0; i < elements.size(); ++i) {
        if (!out.emplace(elements[i], static_cast<element_index>(i)).second) {
          throw Error("duplicate element " + describe(elements[i]));
        }
      }
      return out;
    }

    void check_degree(std::size_t n, std::size_t cap) {
      if (n > cap) {
        throw Error("n exceeds cap (n = " + std::to_string(n) + ", cap = "
                    + std::to_string(cap) + ")");
      }
    }
  }  // namespace

  element_index NearSemiring::index_of(FMap const& f) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == f) {
        return static_cast<element_index>(i);
      }
    }
    throw Error("map " + describe(f) + " is not an element");
  }

  std::vector<std::string> NearSemiring::names() const {
    std::vector<std::string> out;
    out.reserve(elements.size());
    for (auto const& f : elements) {
      out.push_back(describe(f));
    }
    return out;
  }

  NearSemiring make_near_semiring(std::size_t       n,
                                  std::vector<FMap> elements,
                                  std::size_t       jobs) {
    NearSemiring ns;
    ns.n              = n;
    ns.elements       = std::move(elements);
    auto const  index = make_index(ns.elements);
    std::size_t size  = ns.elements.size();
    ns.add_table      = CayleyTable(size);
    ns.mul_table      = CayleyTable(size);

    detail::parallel_chunks(
        size, jobs, [&](std::size_t, std::size_t begin, std::size_t end) {
          for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < size; ++b) {
              auto const& f   = ns.elements[a];
              auto const& g   = ns.elements[b];
              auto        sum = index.find(f + g);
              if (sum == index.end()) {
                throw Error("not closed under +: " + describe(f) + " + "
                            + describe(g));
              }
              auto prod = index.find(compose(f, g));
              if (prod == index.end()) {
                throw Error("not closed under composition: " + describe(f)
                            + " o " + describe(g));
              }
              ns.add_table.set(a, b, sum->second);
              ns.mul_table.set(a, b, prod->second);
            }
          }
        });
    return ns;
  }

  NearSemiring additive_closure(GeneratorSet const&   gens,
                                ClosureOptions const& opts) {
    std::size_t const n = gens.degree();
    check_degree(n, opts.max_degree);
    if (gens.size() == 0) {
      throw Error("cannot close an empty generator set");
    }

    std::vector<FMap>                    elements;
    std::unordered_set<FMap, FMap::Hash> seen;
    for (auto const& g : gens.members()) {
      if (seen.insert(g).second) {
        elements.push_back(g);
      }
    }
    auto const& generators = gens.members();

    std::size_t frontier_begin = 0;
    while (frontier_begin < elements.size()) {
      std::size_t const frontier_end = elements.size();
      std::size_t const count        = frontier_end - frontier_begin;
      std::vector<std::vector<FMap>> found(
          detail::chunk_count(count, opts.jobs));
      detail::parallel_chunks(
          count,
          opts.jobs,
          [&](std::size_t chunk, std::size_t begin, std::size_t end) {
            std::unordered_set<FMap, FMap::Hash> local;
            for (std::size_t i = begin; i < end; ++i) {
              auto const& s = elements[frontier_begin + i];
              for (auto const& g : generators) {
                FMap sum = s + g;
                if (!seen.contains(sum) && local.insert(sum).second) {
                  found[chunk].push_back(std::move(sum));
                }
              }
            }
          });
      // merge in chunk order, so the result is independent of opts.jobs
      for (auto& chunk : found) {
        for (auto& f : chunk) {
          if (seen.insert(f).second) {
            elements.push_back(std::move(f));
          }
        }
      }
      frontier_begin = frontier_end;
    }

    sort_canonical(elements);
    return make_near_semiring(n, std::move(elements), opts.jobs);
  }

  NearSemiring affine_near_semiring(std::size_t n, ClosureOptions const& opts) {
    check_degree(n, opts.max_degree);
    return additive_closure(enumerate_aff(n), opts);
  }

  bool ValidationReport::all_passed() const noexcept {
    for (auto const& e : entries) {
      if (!e.passed) {
        return false;
      }
    }
    return true;
  }

  ValidationReport verify_near_semiring(NearSemiring const&         ns,
                                        AssociativityOptions const& opts) {
    ValidationReport report;
    for (auto const& [name, table] :
         {std::pair{"additive associativity", &ns.add_table},
          std::pair{"multiplicative associativity", &ns.mul_table}}) {
      auto const      r = check_associativity(*table, opts);
      ValidationEntry e{name, r.holds, r.sampled, r.checked, {}};
      if (r.witness) {
        e.witness.assign(r.witness->begin(), r.witness->end());
      }
      report.entries.push_back(std::move(e));
    }

    // f(g + h) = fg + fh
    ValidationEntry     dist{"left distributivity", true, false, 0, {}};
    auto const&         add = ns.add_table;
    auto const&         mul = ns.mul_table;
    std::uint64_t const n   = ns.size();
    auto check = [&](element_index f, element_index g, element_index h) {
      ++dist.checked;
      if (mul(f, add(g, h)) != add(mul(f, g), mul(f, h))) {
        dist.passed  = false;
        dist.witness = {f, g, h};
        return false;
      }
      return true;
    };
    if (n * n * n <= opts.exhaustive_limit) {
      bool ok = true;
      for (element_index f = 0; ok && f < n; ++f) {
        for (element_index g = 0; ok && g < n; ++g) {
          for (element_index h = 0; ok && h < n; ++h) {
            ok = check(f, g, h);
          }
        }
      }
    } else {
      dist.sampled = true;
      std::mt19937_64                              rng(opts.seed + 1);
      std::uniform_int_distribution<element_index> pick(
          0, static_cast<element_index>(n - 1));
      for (std::uint64_t s = 0; s < opts.samples; ++s) {
        element_index const f = pick(rng), g = pick(rng), h = pick(rng);
        if (!check(f, g, h)) {
          break;
        }
      }
    }
    report.entries.push_back(std::move(dist));
    return report;
  }

  std::map<std::size_t, std::size_t> support_histogram(NearSemiring const& ns) {
    std::map<std::size_t, std::size_t> out;
    for (auto const& f : ns.elements) {
      ++out[f.support_size()];
    }
    return out;
  }

  bool intermediate_support_check(NearSemiring const& ns) {
    std::size_t const n    = ns.n;
    std::size_t const full = n * n + 1;
    for (auto const& f : ns.elements) {
      std::size_t const k = f.support_size();
      if ((k > 1 && k < n) || (k > n && k < full)) {
        return false;
      }
    }
    return true;
  }

}  // namespace ans
