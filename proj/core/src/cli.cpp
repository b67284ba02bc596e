#include "ans/cli.hpp"

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ans/affine.hpp"
#include "ans/canonical.hpp"
#include "ans/closure.hpp"
#include "ans/config.hpp"
#include "ans/eggbox.hpp"
#include "ans/exception.hpp"
#include "ans/formulas.hpp"
#include "ans/green.hpp"
#include "ans/json-io.hpp"
#include "ans/verify.hpp"

namespace ans {

  namespace {
    namespace fs = std::filesystem;

    // Raised for bad arguments and I/O problems (exit code 2).
    struct UsageError : Error {
      using Error::Error;
    };

    // Raised when a cached closure cannot be loaded (exit code 1 in verify).
    struct CacheError : Error {
      using Error::Error;
    };

    struct Common {
      std::size_t n         = 2;
      std::size_t jobs      = 1;
      std::string cache_dir;
      std::string out;
      std::string format = "text";
    };

    void check_n(std::size_t n) {
      if (n == 0) {
        throw UsageError("n must be at least 1");
      }
      if (n > max_degree) {
        throw UsageError("n exceeds cap (n = " + std::to_string(n)
                         + ", cap = " + std::to_string(max_degree) + ")");
      }
    }

    std::string effective_cache_dir(Common const& c) {
      if (char const* env = std::getenv("ANS_CACHE_DIR");
          env != nullptr && *env != '\0') {
        return env;
      }
      return c.cache_dir;
    }

    fs::path cache_file(fs::path const& dir, std::size_t n) {
      return dir
             / ("a_plus_b" + std::to_string(n) + ".v"
                + std::to_string(format_version) + ".json");
    }

    // A^+(B_n), loaded from the cache when present, otherwise computed (and
    // stored when a cache directory is configured).
    NearSemiring obtain_closure(Common const& c) {
      check_n(c.n);
      auto const dir = effective_cache_dir(c);
      if (!dir.empty()) {
        auto const path = cache_file(dir, c.n);
        if (fs::exists(path)) {
          try {
            auto ns = near_semiring_from_json(read_json(path));
            if (ns.n != c.n) {
              throw Error("holds n = " + std::to_string(ns.n));
            }
            return ns;
          } catch (std::exception const& e) {
            throw CacheError("cannot load cached closure " + path.string()
                             + ": " + e.what());
          }
        }
      }
      ClosureOptions opts;
      opts.jobs = c.jobs;
      auto ns   = affine_near_semiring(c.n, opts);
      if (!dir.empty()) {
        write_json(cache_file(dir, c.n), to_json(ns));
      }
      return ns;
    }

    void emit(Common const& c, std::string const& text, std::ostream& out) {
      if (c.out.empty()) {
        out << text;
        return;
      }
      fs::path const path(c.out);
      if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
      }
      std::ofstream file(path, std::ios::binary);
      if (!file || !(file << text)) {
        throw UsageError("cannot write " + path.string());
      }
    }

    std::vector<std::size_t> parse_n_range(std::string const& text) {
      std::vector<std::size_t> out;
      auto number = [&](std::string const& s) -> std::size_t {
        if (s.empty()
            || s.find_first_not_of("0123456789") != std::string::npos
            || s.size() > 6) {
          throw UsageError("invalid n range '" + text + "'");
        }
        return std::stoul(s);
      };
      std::stringstream ss(text);
      std::string       part;
      while (std::getline(ss, part, ',')) {
        auto const dots = part.find("..");
        if (dots == std::string::npos) {
          out.push_back(number(part));
        } else {
          auto const lo = number(part.substr(0, dots));
          auto const hi = number(part.substr(dots + 2));
          if (lo > hi) {
            throw UsageError("invalid n range '" + text + "'");
          }
          for (auto k = lo; k <= hi; ++k) {
            out.push_back(k);
          }
        }
      }
      if (out.empty()) {
        throw UsageError("invalid n range '" + text + "'");
      }
      for (auto k : out) {
        check_n(k);
      }
      return out;
    }

    void add_common(CLI::App* cmd, Common& c, bool with_format) {
      cmd->add_option("--cache-dir", c.cache_dir,
                      "Directory for cached closures (ANS_CACHE_DIR wins)");
      cmd->add_option("--jobs", c.jobs, "Worker threads")
          ->check(CLI::Range(1, 256));
      cmd->add_option("--out", c.out, "Write output to this path");
      if (with_format) {
        cmd->add_option("--format", c.format, "text or json");
      }
    }

    void require_format(std::string const&              format,
                        std::vector<std::string> const& allowed) {
      for (auto const& a : allowed) {
        if (format == a) {
          return;
        }
      }
      throw UsageError("unknown format '" + format + "'");
    }

    Reduct parse_reduct(std::string const& name) {
      try {
        return reduct_from_string(name);
      } catch (std::exception const&) {
        throw UsageError("unknown reduct '" + name + "'");
      }
    }

    int cmd_enumerate(Common const& c, std::ostream& out) {
      auto const ns = obtain_closure(c);
      if (!c.out.empty()) {
        emit(c, dump(to_json(ns)), out);
      }
      out << ns.size() << " elements\n";
      for (auto [k, count] : support_histogram(ns)) {
        out << "  |supp| = " << k << ": " << count << "\n";
      }
      return exit_ok;
    }

    int cmd_generators(Common const& c, std::string const& kind_name,
                       std::ostream& out) {
      check_n(c.n);
      require_format(c.format, {"text", "json"});
      GeneratorKind kind;
      try {
        kind = generator_kind_from_string(kind_name);
      } catch (std::exception const&) {
        throw UsageError("unknown generator kind '" + kind_name + "'");
      }
      auto const gens = enumerate_generators(c.n, kind);
      if (c.format == "json") {
        emit(c, dump(to_json(gens)), out);
        return exit_ok;
      }
      std::ostringstream text;
      text << to_string(kind) << "(B_" << c.n << "): " << gens.size()
           << " maps\n";
      for (auto const& f : gens.members()) {
        text << "  " << describe(f) << "\n";
      }
      emit(c, text.str(), out);
      return exit_ok;
    }

    int cmd_green(Common const& c, std::string const& reduct_name,
                  std::ostream& out) {
      auto const reduct = parse_reduct(reduct_name);
      require_format(c.format, {"text", "json"});
      auto const ns    = obtain_closure(c);
      auto const gs    = green_brute(ns.reduct(reduct), c.jobs);
      auto const rec   = class_counts(gs);
      auto const names = ns.names();
      if (c.format == "json") {
        nlohmann::json doc = {{"n", c.n},
                              {"reduct", to_string(reduct)},
                              {"elements", names},
                              {"structure", to_json(gs)}};
        emit(c, dump(doc), out);
        return exit_ok;
      }
      std::ostringstream text;
      text << "A^+(B_" << c.n << ") " << to_string(reduct) << ": "
           << ns.size() << " elements\n"
           << "  R-classes: " << rec.r << "\n"
           << "  L-classes: " << rec.l << "\n"
           << "  D-classes: " << rec.d << "\n"
           << "  J-classes: " << rec.j << "\n"
           << "  H-classes: " << rec.h << "\n"
           << "  idempotents: " << rec.idempotents << "\n"
           << "  regular: " << rec.regular << "\n";
      for (auto rel : {GreenRelation::R, GreenRelation::L, GreenRelation::D,
                       GreenRelation::H}) {
        text << to_string(rel) << "-classes:\n";
        for (auto const& cls : gs.partition(rel).classes()) {
          text << "  {";
          for (std::size_t i = 0; i < cls.size(); ++i) {
            text << (i == 0 ? "" : ", ") << names[cls[i]];
          }
          text << "}\n";
        }
      }
      emit(c, text.str(), out);
      return exit_ok;
    }

    int cmd_eggbox(Common const& c, std::string const& reduct_name,
                   std::ostream& out) {
      auto const reduct = parse_reduct(reduct_name);
      require_format(c.format, {"text", "dot", "json"});
      auto const ns  = obtain_closure(c);
      auto const gs  = green_brute(ns.reduct(reduct), c.jobs);
      auto const box = make_eggbox(reduct, ns.names(), gs);
      if (c.format == "text") {
        emit(c, render_text(box), out);
      } else if (c.format == "dot") {
        emit(c, render_dot(box), out);
      } else {
        emit(c, dump(to_json(box)), out);
      }
      return exit_ok;
    }

    int cmd_counts(Common const& c, std::ostream& out) {
      require_format(c.format, {"text", "json"});
      if (c.n == 0) {
        throw UsageError("n must be at least 1");
      }
      CountsTable t;
      try {
        t = counts(c.n);
      } catch (std::exception const& e) {
        throw UsageError(e.what());
      }
      if (c.format == "json") {
        emit(c, dump(to_json(t)), out);
        return exit_ok;
      }
      std::ostringstream text;
      text << "n = " << t.n << "\n"
           << "  |End(B_n)|: " << t.end_count << "\n"
           << "  |Aut(B_n)|: " << t.aut_count << "\n"
           << "  |Aff(B_n)|: " << t.aff_count << "\n"
           << "  |A^+(B_n)|: " << t.a_plus_total << "\n"
           << "  full support: " << t.breakup.full << "\n"
           << "  n-support: " << t.breakup.n_support << "\n"
           << "  singleton support: " << t.breakup.singleton << "\n"
           << "  zero support: " << t.breakup.zero << "\n"
           << "  additive R/L/D/H: " << t.additive.r << " " << t.additive.l
           << " " << t.additive.d << " " << t.additive.h << "\n"
           << "  additive idempotents/regular: " << t.additive.idempotents
           << " " << t.additive.regular << "\n"
           << "  multiplicative R/L/D/H: " << t.multiplicative.r << " "
           << t.multiplicative.l << " " << t.multiplicative.d << " "
           << t.multiplicative.h << "\n"
           << "  multiplicative idempotents/regular: "
           << t.multiplicative.idempotents << " " << t.multiplicative.regular
           << "\n";
      emit(c, text.str(), out);
      return exit_ok;
    }

    int cmd_verify(Common const& c, std::string const& range,
                   std::ostream& out) {
      auto const degrees = parse_n_range(range);
      bool       all     = true;
      for (auto n : degrees) {
        Common one = c;
        one.n      = n;
        std::optional<NearSemiring> ns;
        try {
          ns = obtain_closure(one);
        } catch (CacheError const& e) {
          out << "n = " << n << "\n  cached closure loads: FAIL ("
              << e.what() << ")\n";
          all = false;
          continue;
        }
        VerifyOptions opts;
        opts.jobs      = c.jobs;
        auto const run = verify_structure(*ns, opts);
        out << render_report(run.report);
        all = all && run.report.all_passed();
        if (!c.out.empty()) {
          fs::path const dir(c.out);
          auto const     suffix = "_b" + std::to_string(n) + ".json";
          write_json(dir / ("a_plus" + suffix), to_json(*ns));
          if (run.additive) {
            write_json(dir / ("green_additive" + suffix),
                       to_json(*run.additive));
          }
          if (run.multiplicative) {
            write_json(dir / ("green_multiplicative" + suffix),
                       to_json(*run.multiplicative));
          }
          write_json(dir / ("verify" + suffix), to_json(run.report));
        }
      }
      out << (all ? "all checks passed\n" : "verification FAILED\n");
      return all ? exit_ok : exit_mismatch;
    }
  }  // namespace

  int run_cli(int argc, char const* const* argv, std::ostream& out,
              std::ostream& err) {
    CLI::App app{"Affine near-semirings over Brandt semigroups", "ans"};
    app.require_subcommand(1);

    Common      common;
    std::string reduct = "additive";
    std::string kind   = "aff";
    std::string range;

    auto* enumerate = app.add_subcommand(
        "enumerate", "Compute A^+(B_n) and print its size and supports");
    enumerate->add_option("--n", common.n, "Degree n")->required();
    add_common(enumerate, common, false);

    auto* generators
        = app.add_subcommand("generators", "List End, Aut, Aff or constants");
    generators->add_option("--n", common.n, "Degree n")->required();
    generators->add_option("--kind", kind, "End, Aut, Aff or ConstAll (case-insensitive)");
    add_common(generators, common, true);

    auto* green = app.add_subcommand(
        "green", "Green's relations of one reduct of A^+(B_n)");
    green->add_option("--n", common.n, "Degree n")->required();
    green->add_option("--reduct", reduct, "additive or multiplicative");
    add_common(green, common, true);

    auto* eggbox
        = app.add_subcommand("eggbox", "Egg-box diagram of one reduct");
    eggbox->add_option("--n", common.n, "Degree n")->required();
    eggbox->add_option("--reduct", reduct, "additive or multiplicative");
    add_common(eggbox, common, false);
    eggbox->add_option("--format", common.format, "text, dot or json");

    auto* counts_cmd
        = app.add_subcommand("counts", "Closed-form counts for degree n");
    counts_cmd->add_option("--n", common.n, "Degree n")->required();
    add_common(counts_cmd, common, true);

    auto* verify = app.add_subcommand(
        "verify", "Run every structural check for a range of n");
    verify->add_option("--n", range, "Degree or range, e.g. 2 or 1..3")
        ->required();
    add_common(verify, common, false);

    try {
      std::vector<std::string> args;
      for (int i = argc - 1; i > 0; --i) {
        args.emplace_back(argv[i]);
      }
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return exit_ok;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }

    try {
      if (*enumerate) {
        return cmd_enumerate(common, out);
      }
      if (*generators) {
        return cmd_generators(common, kind, out);
      }
      if (*green) {
        return cmd_green(common, reduct, out);
      }
      if (*eggbox) {
        return cmd_eggbox(common, reduct, out);
      }
      if (*counts_cmd) {
        return cmd_counts(common, out);
      }
      if (*verify) {
        return cmd_verify(common, range, out);
      }
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
    return exit_usage;
  }

}  // namespace ans
