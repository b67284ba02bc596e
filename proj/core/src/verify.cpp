#include "ans/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "ans/affine.hpp"
#include "ans/analytic.hpp"
#include "ans/canonical.hpp"
#include "ans/formulas.hpp"
#include "ans/perm.hpp"
#include "ans/structure.hpp"

namespace ans {

  namespace {
    using support_mask = std::uint64_t;

    std::string const plus_tag = "(+)";
    std::string const circ_tag = "(∘)";

    std::string tag(Reduct r) {
      return r == Reduct::additive ? plus_tag : circ_tag;
    }

    std::string op_symbol(Reduct r) {
      return r == Reduct::additive ? " + " : " o ";
    }

    class Checker {
     public:
      explicit Checker(VerifyReport& report) : _report(report) {}

      void add(std::string name, bool passed, std::string detail = {}) {
        _report.checks.push_back({std::move(name), passed, std::move(detail)});
      }

      // Runs `body`, turning any exception into a failed check.
      void run(std::string const&                         name,
               std::function<bool(std::string&)> const& body) {
        std::string detail;
        bool        passed = false;
        try {
          passed = body(detail);
        } catch (std::exception const& e) {
          passed = false;
          detail = e.what();
        }
        add(name, passed, detail);
      }

      void count(std::string const& name,
                 std::uint64_t      expected,
                 std::uint64_t      measured) {
        add(name + " = " + std::to_string(expected),
            expected == measured,
            "measured " + std::to_string(measured));
      }

     private:
      VerifyReport& _report;
    };

    support_mask mask_of(FMap const& f) {
      support_mask m = 0;
      for (std::size_t p = 0; p < f.domain_size(); ++p) {
        if (f.at(p) != 0) {
          m |= support_mask(1) << p;
        }
      }
      return m;
    }

    bool additive_idempotent_shape(CanonicalElem const& c) {
      switch (c.shape()) {
        case Shape::zero:
          return true;
        case Shape::constant: {
          auto const v = c.get<ConstantMap>().value;
          return v.row() == v.col();
        }
        case Shape::singleton: {
          auto const t = c.get<SingletonMap>().target;
          return t.row() == t.col();
        }
        case Shape::n_support:
          return false;
      }
      return false;
    }

    bool multiplicative_idempotent_shape(CanonicalElem const& c) {
      switch (c.shape()) {
        case Shape::zero:
        case Shape::constant:
          return true;
        case Shape::singleton: {
          auto const& s = c.get<SingletonMap>();
          return s.source == s.target;
        }
        case Shape::n_support: {
          auto const& t = c.get<NSupportMap>();
          return t.column_in == t.column_out && t.row_action.is_identity();
        }
      }
      return false;
    }

    // Cayley tables agree with + and composition of the stored maps.
    void check_tables(Checker& chk, NearSemiring const& ns) {
      std::unordered_map<FMap, element_index, FMap::Hash> index;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        index.emplace(ns.elements[i], static_cast<element_index>(i));
      }
      auto const names = ns.names();
      for (Reduct r : {Reduct::additive, Reduct::multiplicative}) {
        auto const& table = r == Reduct::additive ? ns.add_table : ns.mul_table;
        std::string witness;
        bool        closed = true, agrees = table.size() == ns.size();
        if (!agrees) {
          witness = "table has " + std::to_string(table.size())
                    + " rows for " + std::to_string(ns.size()) + " elements";
        }
        for (std::size_t i = 0; agrees && closed && i < ns.size(); ++i) {
          for (std::size_t j = 0; j < ns.size(); ++j) {
            auto const& f = ns.elements[i];
            auto const& g = ns.elements[j];
            FMap const  h = r == Reduct::additive ? f + g : compose(f, g);
            auto const  it = index.find(h);
            if (it == index.end()) {
              closed  = false;
              witness = names[i] + op_symbol(r) + names[j] + " = "
                        + describe(h) + " is not an element";
              break;
            }
            if (it->second != table(i, j)) {
              agrees  = false;
              auto const stored = table(i, j);
              witness = names[i] + op_symbol(r) + names[j] + " = "
                        + names[it->second] + ", table says "
                        + (stored < names.size() ? names[stored]
                                                 : std::to_string(stored));
              break;
            }
          }
        }
        chk.add("closed under" + op_symbol(r).substr(0, 2)
                    + " and table " + tag(r) + " matches the maps",
                closed && agrees,
                witness);
      }
    }

    void check_green_counts(Checker&              chk,
                            Reduct                r,
                            GreenStructure const& gs,
                            CountsTable const&    ct) {
      auto const rec = class_counts(gs);
      bool const add = r == Reduct::additive;
      auto const t   = tag(r);
      chk.count("R-classes" + t, add ? ct.additive.r : ct.multiplicative.r,
                rec.r);
      chk.count("L-classes" + t, add ? ct.additive.l : ct.multiplicative.l,
                rec.l);
      chk.count("D-classes" + t, add ? ct.additive.d : ct.multiplicative.d,
                rec.d);
      chk.count("H-classes" + t, add ? ct.additive.h : ct.multiplicative.h,
                rec.h);
      chk.count("idempotents" + t,
                add ? ct.additive.idempotents : ct.multiplicative.idempotents,
                rec.idempotents);
      chk.count("regular elements" + t,
                add ? ct.additive.regular : ct.multiplicative.regular,
                rec.regular);
      chk.add("D = J " + t, gs.d == gs.j);
    }

    void check_analytic(Checker&                          chk,
                        Reduct                            r,
                        GreenStructure const&             gs,
                        std::vector<CanonicalElem> const& canon,
                        std::vector<std::string> const&   names) {
      std::string witness;
      bool        ok = true;
      for (auto rel : {GreenRelation::R,
                       GreenRelation::L,
                       GreenRelation::D,
                       GreenRelation::J,
                       GreenRelation::H}) {
        auto const& part = gs.partition(rel);
        for (std::size_t i = 0; ok && i < canon.size(); ++i) {
          for (std::size_t j = 0; j < canon.size(); ++j) {
            bool const a = green_analytic(r, canon[i], canon[j], rel);
            bool const b = part.related(i, j);
            if (a != b) {
              ok      = false;
              witness = names[i] + " " + to_string(rel) + " " + names[j]
                        + ": analytic " + (a ? "true" : "false")
                        + ", brute force " + (b ? "true" : "false");
              break;
            }
          }
        }
        if (!ok) {
          break;
        }
      }
      chk.add("analytic classifier agrees with brute force " + tag(r)
                  + " on all pairs",
              ok,
              witness);
    }

    void check_membership(Checker&                                chk,
                          std::string const&                      name,
                          std::vector<bool> const&                measured,
                          std::function<bool(std::size_t)> const& expected,
                          std::vector<std::string> const&         names) {
      for (std::size_t x = 0; x < measured.size(); ++x) {
        if (measured[x] != expected(x)) {
          chk.add(name,
                  false,
                  names[x] + (measured[x] ? " is" : " is not")
                      + " in the measured set");
          return;
        }
      }
      chk.add(name, true);
    }

    void check_subsets(Checker& chk, NearSemiring const& ns) {
      auto subset_line = [&](std::string const& name,
                             Reduct             r,
                             std::string const& subset,
                             bool SubsetReport::*flag) {
        chk.run(name, [&](std::string& detail) {
          auto const rep = structural_checks(ns, r, subset);
          detail         = rep.detail;
          if (!rep.closed) {
            detail = "not closed" + (detail.empty() ? "" : ": " + detail);
          }
          return rep.*flag;
        });
      };
      subset_line("(K, +) is an inverse semigroup",
                  Reduct::additive,
                  "K",
                  &SubsetReport::inverse);
      subset_line("(N, ∘) is an inverse semigroup",
                  Reduct::multiplicative,
                  "N",
                  &SubsetReport::inverse);
      subset_line("A^+(B_n)∘ is orthodox",
                  Reduct::multiplicative,
                  "all",
                  &SubsetReport::orthodox);

      auto iso_line = [&](Reduct r, std::string const& subset,
                          std::string const& label) {
        SubsetReport rep;
        std::string  error;
        try {
          rep = structural_checks(ns, r, subset);
        } catch (std::exception const& e) {
          error = e.what();
        }
        std::string const target = rep.isomorphism_target.value_or("?");
        chk.add(label + tag(r) + " ≅ " + target,
                error.empty() && rep.isomorphism_verified.value_or(false),
                error.empty() ? rep.detail : error);
      };
      iso_line(Reduct::additive, "constants", "constants");
      iso_line(Reduct::additive, "singleton-ideal", "singleton ideal");
      iso_line(Reduct::multiplicative, "singleton-ideal", "singleton ideal");

      chk.run("Aut(B_n) ≅ S_n", [&](std::string& detail) {
        auto const rep = check_aut_isomorphism(ns.n);
        detail         = rep.detail;
        return rep.bijective && rep.homomorphism;
      });
    }
  }  // namespace

  bool VerifyReport::all_passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.passed;
    });
  }

  std::vector<CheckResult> VerifyReport::failures() const {
    std::vector<CheckResult> out;
    std::copy_if(checks.begin(),
                 checks.end(),
                 std::back_inserter(out),
                 [](auto const& c) { return !c.passed; });
    return out;
  }

  VerifyRun verify_structure(NearSemiring const&  ns,
                             VerifyOptions const& opts) {
    VerifyRun run;
    run.report.n = ns.n;
    Checker           chk(run.report);
    std::size_t const n  = ns.n;
    std::string const bn = "B_" + std::to_string(n);

    CountsTable ct{};
    try {
      ct = counts(n);
    } catch (std::exception const& e) {
      chk.add("counts(" + std::to_string(n) + ")", false, e.what());
      return run;
    }
    auto const names = ns.names();

    check_tables(chk, ns);
    chk.count("|A^+(" + bn + ")|", ct.a_plus_total, ns.size());

    std::vector<CanonicalElem> canon;
    bool                       classified = true;
    {
      std::string witness;
      for (std::size_t i = 0; i < ns.size(); ++i) {
        auto c = try_classify(ns.elements[i]);
        if (!c) {
          classified = false;
          witness    = names[i] + " is not a canonical shape";
          break;
        }
        canon.push_back(*c);
      }
      chk.add("every element classifies", classified, witness);
    }
    if (classified) {
      std::uint64_t zero = 0, constant = 0, singleton = 0, nsupport = 0;
      for (auto const& c : canon) {
        switch (c.shape()) {
          case Shape::zero:
            ++zero;
            break;
          case Shape::constant:
            ++constant;
            break;
          case Shape::singleton:
            ++singleton;
            break;
          case Shape::n_support:
            ++nsupport;
            break;
        }
      }
      auto const& b = ct.breakup;
      std::ostringstream expected, measured;
      expected << "{zero:" << b.zero << ", singleton:" << b.singleton
               << ", n-support:" << b.n_support << ", full:" << b.full << "}";
      measured << "{zero:" << zero << ", singleton:" << singleton
               << ", n-support:" << nsupport << ", full:" << constant << "}";
      chk.add("breakup " + expected.str(),
              expected.str() == measured.str(),
              "measured " + measured.str());

      chk.run("elements in canonical order", [&](std::string& detail) {
        auto const expect = enumerate_canonical(n);
        if (expect.size() != canon.size()) {
          detail = "expected " + std::to_string(expect.size()) + " elements";
          return false;
        }
        for (std::size_t i = 0; i < canon.size(); ++i) {
          if (!(canon[i] == expect[i])) {
            detail = "position " + std::to_string(i) + " holds " + names[i]
                     + ", expected " + expect[i].to_string();
            return false;
          }
        }
        return true;
      });
    }

    chk.run("|End(" + bn + ")| = " + std::to_string(ct.end_count),
            [&](std::string& detail) {
              auto const end = enumerate_end(n);
              detail = "measured " + std::to_string(end.size());
              for (auto const& f : end.members()) {
                if (!is_endomorphism(f)) {
                  detail = describe(f) + " is not an endomorphism";
                  return false;
                }
              }
              return end.size() == ct.end_count;
            });
    chk.run("|Aut(" + bn + ")| = " + std::to_string(ct.aut_count),
            [&](std::string& detail) {
              auto const aut = enumerate_aut(n);
              detail         = "measured " + std::to_string(aut.size());
              return aut.size() == ct.aut_count;
            });
    chk.run("|Aff(" + bn + ")| = " + std::to_string(ct.aff_count),
            [&](std::string& detail) {
              auto const aff = enumerate_aff(n);
              detail         = "measured " + std::to_string(aff.size());
              for (auto const& f : aff.members()) {
                if (f.at(0) != 0 && !(f.is_constant())) {
                  detail = describe(f)
                           + " has theta in its support but is not constant";
                  return false;
                }
              }
              return aff.size() == ct.aff_count;
            });

    auto const axioms = verify_near_semiring(ns, opts.associativity);
    for (auto const& e : axioms.entries) {
      std::string witness;
      for (auto x : e.witness) {
        witness += (witness.empty() ? "" : ", ")
                   + (x < names.size() ? names[x] : std::to_string(x));
      }
      chk.add(e.axiom + (e.sampled ? " (sampled)" : ""), e.passed, witness);
    }

    std::vector<support_mask> mask;
    for (auto const& f : ns.elements) {
      mask.push_back(mask_of(f));
    }
    auto const  size = ns.size();
    auto const& add  = ns.add_table;
    auto const& mul  = ns.mul_table;
    bool const  tables_usable
        = add.size() == size && mul.size() == size && [&] {
            for (std::size_t i = 0; i < size; ++i) {
              for (std::size_t j = 0; j < size; ++j) {
                if (add(i, j) >= size || mul(i, j) >= size) {
                  return false;
                }
              }
            }
            return true;
          }();
    if (!tables_usable) {
      chk.add("tables in range", false, "entry outside the element range");
      return run;
    }

    auto pair_check = [&](std::string const& name, auto&& pred) {
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          if (!pred(i, j)) {
            chk.add(name, false, names[i] + ", " + names[j]);
            return;
          }
        }
      }
      chk.add(name, true);
    };

    {
      bool        ok = true;
      std::string witness;
      for (std::size_t i = 0; i < size; ++i) {
        auto const ff = add(i, i);
        if (add(ff, i) != ff) {
          ok      = false;
          witness = names[i];
          break;
        }
      }
      chk.add("aperiodicity f + f = f + f + f", ok, witness);
    }
    pair_check("supp(f + g) within supp(f) n supp(g)",
               [&](std::size_t i, std::size_t j) {
                 return (mask[add(i, j)] & ~(mask[i] & mask[j])) == 0;
               });
    pair_check("supp(f o g) within supp(f) for nonconstant g",
               [&](std::size_t i, std::size_t j) {
                 return ns.elements[j].is_constant()
                        || (mask[mul(i, j)] & ~mask[i]) == 0;
               });
    if (classified) {
      auto pop = [&](std::size_t x) {
        return static_cast<std::size_t>(std::popcount(mask[x]));
      };
      pair_check("sums of n-support maps and nonzero constants",
                 [&](std::size_t i, std::size_t j) {
                   bool const fi = canon[i].shape() == Shape::n_support;
                   bool const fj = canon[j].shape() == Shape::n_support;
                   bool const hi = canon[i].shape() == Shape::constant;
                   if (fi && fj) {
                     return pop(add(i, j)) <= 1;
                   }
                   if (hi && fj) {
                     return pop(add(i, j)) == 1;
                   }
                   if (fi && canon[j].shape() == Shape::constant) {
                     auto const k = pop(add(i, j));
                     return k == 0 || k == n;
                   }
                   return true;
                 });
    }
    chk.add("no intermediate support sizes", intermediate_support_check(ns));

    std::optional<GreenStructure> green[2];
    for (Reduct r : {Reduct::additive, Reduct::multiplicative}) {
      auto& slot = green[r == Reduct::additive ? 0 : 1];
      try {
        slot = green_brute(ns.reduct(r), opts.jobs);
      } catch (std::exception const& e) {
        chk.add("Green's relations " + tag(r), false, e.what());
        continue;
      }
      check_green_counts(chk, r, *slot, ct);
      if (classified) {
        check_analytic(chk, r, *slot, canon, names);
      }
    }

    if (green[0]) {
      auto const& gs = *green[0];
      chk.add("H trivial " + plus_tag,
              gs.h.size() == size,
              "measured " + std::to_string(gs.h.size()) + " classes");
      if (n >= 2) {
        check_membership(
            chk,
            "regular" + plus_tag + " iff support size is not n",
            gs.regular,
            [&](std::size_t x) { return ns.elements[x].support_size() != n; },
            names);
        if (classified) {
          check_membership(
              chk,
              "idempotents" + plus_tag
                  + " are xi_theta, xi(k,k) and <(k,l)->(p,p)>",
              gs.idempotent,
              [&](std::size_t x) { return additive_idempotent_shape(canon[x]); },
              names);
        }
      }
      bool        ok = true;
      std::string witness;
      for (std::size_t x = 0; x < size; ++x) {
        auto const idx = gs.eventual_index[x];
        bool const expect_two
            = n >= 2 && ns.elements[x].support_size() == n;
        if (idx != (expect_two ? 2u : 1u)) {
          ok      = false;
          witness = names[x] + " has index " + std::to_string(idx);
          break;
        }
      }
      chk.add(n >= 2 ? "eventual regularity" + plus_tag
                           + " index <= 2, equal to 2 exactly on n-support"
                     : "eventual regularity" + plus_tag + " index 1",
              ok,
              witness);
    }
    if (green[1]) {
      auto const& gs = *green[1];
      check_membership(
          chk,
          "every element regular" + circ_tag,
          gs.regular,
          [](std::size_t) { return true; },
          names);
      if (n >= 2 && classified) {
        check_membership(
            chk,
            "idempotents" + circ_tag
                + " are constants, (k,k;[id]) and <(i,j)->(i,j)>",
            gs.idempotent,
            [&](std::size_t x) {
              return multiplicative_idempotent_shape(canon[x]);
            },
            names);
      }
    }
    if (n == 1 && green[0] && green[1]) {
      check_membership(
          chk,
          "every element idempotent in both reducts",
          [&] {
            std::vector<bool> both(size);
            for (std::size_t x = 0; x < size; ++x) {
              both[x] = green[0]->idempotent[x] && green[1]->idempotent[x];
            }
            return both;
          }(),
          [](std::size_t) { return true; },
          names);
    }

    check_subsets(chk, ns);

    run.additive       = std::move(green[0]);
    run.multiplicative = std::move(green[1]);
    return run;
  }

  std::string render_report(VerifyReport const& report) {
    std::ostringstream out;
    std::size_t        passed = 0;
    out << "n = " << report.n << "\n";
    for (auto const& c : report.checks) {
      out << "  " << c.name << ": " << (c.passed ? "PASS" : "FAIL");
      if (c.passed) {
        ++passed;
      } else if (!c.detail.empty()) {
        out << " (" << c.detail << ")";
      }
      out << "\n";
    }
    out << "n = " << report.n << ": " << passed << "/" << report.checks.size()
        << " checks passed\n";
    return out.str();
  }

  nlohmann::json to_json(VerifyReport const& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (auto const& c : report.checks) {
      checks.push_back(
          {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"n", report.n},
            {"all_passed", report.all_passed()},
            {"checks", std::move(checks)}};
  }

}  // namespace ans
