#include "ans/semigroup.hpp"

#include <random>

#include "ans/exception.hpp"

namespace ans {

  std::string to_string(Reduct r) {
    return r == Reduct::additive ? "additive" : "multiplicative";
  }

  Reduct reduct_from_string(std::string const& name) {
    if (name == "additive" || name == "+") {
      return Reduct::additive;
    }
    if (name == "multiplicative" || name == "o") {
      return Reduct::multiplicative;
    }
    throw Error("unknown reduct \"" + name
                + "\" (expected additive or multiplicative)");
  }

  void FiniteSemigroup::check_closed() const {
    std::size_t const n = size();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table(a, b) >= n) {
          throw Error("Cayley table entry (" + std::to_string(a) + ","
                      + std::to_string(b) + ") = "
                      + std::to_string(table(a, b)) + " is out of range");
        }
      }
    }
  }

  AssociativityResult check_associativity(CayleyTable const&          t,
                                          AssociativityOptions const& opts) {
    AssociativityResult out;
    std::uint64_t const n = t.size();
    auto check = [&](element_index a, element_index b, element_index c) {
      ++out.checked;
      if (t(t(a, b), c) != t(a, t(b, c))) {
        out.holds   = false;
        out.witness = {a, b, c};
        return false;
      }
      return true;
    };
    if (n * n * n <= opts.exhaustive_limit) {
      for (element_index a = 0; a < n; ++a) {
        for (element_index b = 0; b < n; ++b) {
          for (element_index c = 0; c < n; ++c) {
            if (!check(a, b, c)) {
              return out;
            }
          }
        }
      }
      return out;
    }
    out.sampled = true;
    std::mt19937_64                              rng(opts.seed);
    std::uniform_int_distribution<element_index> pick(
        0, static_cast<element_index>(n - 1));
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      element_index const a = pick(rng), b = pick(rng), c = pick(rng);
      if (!check(a, b, c)) {
        return out;
      }
    }
    return out;
  }

}  // namespace ans
