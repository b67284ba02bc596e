#include "ans/structure.hpp"

#include <algorithm>
#include <functional>

#include "ans/affine.hpp"
#include "ans/canonical.hpp"
#include "ans/exception.hpp"
#include "ans/green.hpp"

namespace ans {

  namespace {
    using code_type = std::size_t;
    using code_fn   = std::function<std::optional<code_type>(element_index)>;
    using op_fn     = std::function<code_type(code_type, code_type)>;

    // Checks that code_of is a bijection from members onto [0, target_size)
    // carrying `table` to `op`.
    bool check_isomorphism(NearSemiring const&               ns,
                           CayleyTable const&                table,
                           std::vector<element_index> const& members,
                           code_fn const&                    code_of,
                           std::size_t                       target_size,
                           op_fn const&                      op,
                           std::string&                      detail) {
      std::vector<bool> hit(target_size, false);
      for (auto x : members) {
        auto c = code_of(x);
        if (!c || *c >= target_size || hit[*c]) {
          detail = "candidate bijection fails at " + describe(ns.elements[x]);
          return false;
        }
        hit[*c] = true;
      }
      if (members.size() != target_size) {
        detail = "subset has " + std::to_string(members.size())
                 + " elements, target has " + std::to_string(target_size);
        return false;
      }
      for (auto a : members) {
        for (auto b : members) {
          auto c = code_of(table(a, b));
          if (!c || *c != op(*code_of(a), *code_of(b))) {
            detail = "operation not preserved at ("
                     + describe(ns.elements[a]) + ", "
                     + describe(ns.elements[b]) + ")";
            return false;
          }
        }
      }
      return true;
    }

    // support point and image of a map with |supp| = 1
    std::optional<std::pair<std::size_t, std::size_t>>
    singleton_point(FMap const& f) {
      if (f.support_size() != 1 || f.at(0) != 0) {
        return std::nullopt;
      }
      for (std::size_t x = 1; x < f.domain_size(); ++x) {
        if (f.at(x) != 0) {
          return std::pair{x, std::size_t(f.at(x))};
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::vector<std::string> const& subset_names() {
    static std::vector<std::string> const names
        = {"all", "K", "N", "constants", "singleton-ideal"};
    return names;
  }

  std::vector<element_index> subset_members(NearSemiring const& ns,
                                            std::string const&  subset) {
    std::vector<element_index> out;
    std::size_t const          full = ns.n * ns.n + 1;
    if (subset == "K") {
      return regular_elements(ns.additive());
    }
    std::function<bool(FMap const&)> keep;
    if (subset == "all") {
      keep = [](FMap const&) { return true; };
    } else if (subset == "N") {
      keep = [full](FMap const& f) { return f.support_size() != full; };
    } else if (subset == "constants") {
      keep = [](FMap const& f) { return f.is_constant(); };
    } else if (subset == "singleton-ideal") {
      keep = [](FMap const& f) { return f.support_size() <= 1; };
    } else {
      throw Error("unknown subset \"" + subset
                  + "\" (expected all, K, N, constants or singleton-ideal)");
    }
    for (element_index i = 0; i < ns.size(); ++i) {
      if (keep(ns.elements[i])) {
        out.push_back(i);
      }
    }
    return out;
  }

  SubsetReport structural_checks(NearSemiring const& ns,
                                 Reduct              reduct,
                                 std::string const&  subset) {
    SubsetReport rep;
    rep.subset  = subset;
    rep.reduct  = reduct;
    rep.members = subset_members(ns, subset);
    auto const& t = reduct == Reduct::additive ? ns.add_table : ns.mul_table;
    auto const& members = rep.members;

    std::vector<bool> in(ns.size(), false);
    for (auto x : members) {
      in[x] = true;
    }

    rep.closed = true;
    for (auto a : members) {
      for (auto b : members) {
        if (!in[t(a, b)]) {
          rep.closed = false;
          rep.detail = "not closed: " + describe(ns.elements[a]) + ", "
                       + describe(ns.elements[b]);
          break;
        }
      }
      if (!rep.closed) {
        break;
      }
    }

    rep.regular = true;
    for (auto x : members) {
      bool const ok = std::any_of(members.begin(),
                                  members.end(),
                                  [&](element_index y) {
                                    return t(t(x, y), x) == x;
                                  });
      if (!ok) {
        rep.regular = false;
        if (rep.detail.empty()) {
          rep.detail = "not regular: " + describe(ns.elements[x]);
        }
        break;
      }
    }

    std::vector<element_index> idem;
    for (auto x : members) {
      if (t(x, x) == x) {
        idem.push_back(x);
      }
    }
    rep.idempotents_commute = true;
    rep.idempotents_closed  = true;
    for (auto e : idem) {
      for (auto f : idem) {
        if (t(e, f) != t(f, e)) {
          rep.idempotents_commute = false;
        }
        auto const ef = t(e, f);
        if (t(ef, ef) != ef) {
          rep.idempotents_closed = false;
        }
      }
    }
    rep.inverse  = rep.closed && rep.regular && rep.idempotents_commute;
    rep.orthodox = rep.closed && rep.regular && rep.idempotents_closed;

    std::size_t const n  = ns.n;
    std::size_t const n2 = n * n;
    Brandt const      b(n);
    if (subset == "constants" && reduct == Reduct::additive) {
      // alpha |-> xi_alpha
      rep.isomorphism_target = "B_" + std::to_string(n);
      code_fn code = [&](element_index x) -> std::optional<code_type> {
        auto const& f = ns.elements[x];
        if (!f.is_constant()) {
          return std::nullopt;
        }
        return f.at(0);
      };
      op_fn op = [&](code_type x, code_type y) { return b.add_index(x, y); };
      std::string detail;
      rep.isomorphism_verified
          = check_isomorphism(ns, t, members, code, b.size(), op, detail);
      if (!*rep.isomorphism_verified && rep.detail.empty()) {
        rep.detail = detail;
      }
    } else if (subset == "singleton-ideal") {
      // <(k,l)->(p,q)> |-> (p,q) in copy (k,l) under +, and
      // |-> ((k,l),(p,q)) in B_(n^2) under composition; xi_theta |-> zero
      code_fn code = [&](element_index x) -> std::optional<code_type> {
        auto const& f = ns.elements[x];
        if (f.support_size() == 0) {
          return 0;
        }
        auto pt = singleton_point(f);
        if (!pt) {
          return std::nullopt;
        }
        return 1 + (pt->first - 1) * n2 + (pt->second - 1);
      };
      op_fn op;
      if (reduct == Reduct::additive) {
        rep.isomorphism_target = "0-direct union of " + std::to_string(n2)
                                 + " copies of B_" + std::to_string(n);
        op = [&](code_type x, code_type y) -> code_type {
          if (x == 0 || y == 0) {
            return 0;
          }
          std::size_t const copy_x = (x - 1) / n2, copy_y = (y - 1) / n2;
          if (copy_x != copy_y) {
            return 0;
          }
          std::size_t const s
              = b.add_index((x - 1) % n2 + 1, (y - 1) % n2 + 1);
          return s == 0 ? 0 : 1 + copy_x * n2 + (s - 1);
        };
      } else {
        rep.isomorphism_target = "B_" + std::to_string(n2);
        op = [&](code_type x, code_type y) -> code_type {
          if (x == 0 || y == 0) {
            return 0;
          }
          std::size_t const src_x = (x - 1) / n2, dst_x = (x - 1) % n2;
          std::size_t const src_y = (y - 1) / n2, dst_y = (y - 1) % n2;
          return dst_x == src_y ? 1 + src_x * n2 + dst_y : 0;
        };
      }
      std::string detail;
      rep.isomorphism_verified
          = check_isomorphism(ns, t, members, code, n2 * n2 + 1, op, detail);
      if (!*rep.isomorphism_verified && rep.detail.empty()) {
        rep.detail = detail;
      }
    }
    return rep;
  }

  AutIsomorphismReport check_aut_isomorphism(std::size_t n) {
    AutIsomorphismReport rep;
    auto const           perms = enumerate_sn(n);
    auto const           aut   = enumerate_aut(n);
    std::vector<FMap>    images;
    for (auto const& sigma : perms) {
      images.push_back(phi_sigma(sigma));
    }
    auto sorted = images;
    std::sort(sorted.begin(), sorted.end());
    auto members = aut.members();
    std::sort(members.begin(), members.end());
    rep.bijective
        = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()
          && sorted == members;
    if (!rep.bijective) {
      rep.detail = "sigma |-> phi_sigma is not a bijection onto Aut(B_"
                   + std::to_string(n) + ")";
    }
    rep.homomorphism = true;
    for (std::size_t i = 0; i < perms.size() && rep.homomorphism; ++i) {
      for (std::size_t j = 0; j < perms.size(); ++j) {
        if (phi_sigma(perms[i] * perms[j]) != compose(images[i], images[j])) {
          rep.homomorphism = false;
          rep.detail       = "phi_(sigma tau) != phi_sigma o phi_tau at sigma = "
                       + perms[i].to_string()
                       + ", tau = " + perms[j].to_string();
          break;
        }
      }
    }
    return rep;
  }

}  // namespace ans
