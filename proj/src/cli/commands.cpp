#include "multalg/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "multalg/category.hpp"
#include "multalg/cli/diagram_file.hpp"
#include "multalg/cli/report.hpp"
#include "multalg/cli/structure_file.hpp"
#include "multalg/errors.hpp"
#include "multalg/factor.hpp"
#include "multalg/generators.hpp"
#include "multalg/hyperstructures.hpp"
#include "multalg/polynomials.hpp"
#include "multalg/relations.hpp"

namespace multalg::cli {

  namespace {

    struct Outcome {
      Outcome() = default;
      Outcome(Json r, int c = kExitOk, std::string t = {})
          : report(std::move(r)), code(c), text(std::move(t)) {}

      Json        report;
      int         code = kExitOk;
      std::string text;  // when set, replaces the rendered report in text mode
    };

    IdentitySet load_identities(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw FormatError(path, 0, "cannot open file");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return parse_identity_set(buffer.str());
    }

    Json identities_json(IdentitySet const& ids) {
      Json out = Json::array();
      for (auto const& id : ids) {
        out.push_back(id.to_string());
      }
      return out;
    }

    Json signature_json(Signature const& sig) {
      Json out = Json::array();
      for (auto const& op : sig) {
        out.push_back(op.symbol + "/" + std::to_string(op.arity));
      }
      return out;
    }

    Outcome cmd_validate(std::string const& file) {
      auto const s = load_structure(file);
      return {Json{{"command", "validate"},
                   {"status", "ok"},
                   {"name", s.name},
                   {"element_count", s.elements.size()},
                   {"signature", signature_json(s.algebra.signature())},
                   {"universal_algebra", is_universal_algebra(s.algebra)}}};
    }

    Json oracle_entry(EquivRelation const&                  expected,
                      std::function<EquivRelation()> const& route,
                      bool& diverged) {
      try {
        auto const got = route();
        bool const ok  = got == expected;
        diverged       = diverged || !ok;
        return Json{{"status", ok ? "agree" : "diverge"}, {"relation", got.to_string()}};
      } catch (GuardExceeded const& e) {
        return Json{{"status", "skipped"}, {"reason", e.what()}};
      }
    }

    Outcome cmd_fundamental(RunConfig const& cfg,
                            std::string const& file,
                            std::string const& identities,
                            bool oracle) {
      auto const s   = load_structure(file);
      auto const& a  = s.algebra;
      IdentitySet ids;
      if (!identities.empty()) {
        ids = load_identities(identities);
      }
      auto const r   = ids.empty() ? PairRelation(a.size()) : relation_ri(a, ids);
      auto const rel = alpha_closure(a, r);

      Json report{{"command", "fundamental"},
                  {"name", s.name},
                  {"identities", identities_json(ids)},
                  {"relation", partition_json(s, rel)},
                  {"factor_universal", in_eua(a, rel)}};
      Outcome outcome;
      if (oracle) {
        bool diverged = false;
        Json checks;
        checks["enumeration"] = oracle_entry(
            rel, [&] { return alpha_closure_by_enumeration(a, r, cfg.limits); }, diverged);
        checks["polynomials"] = oracle_entry(
            rel, [&] { return alpha_i_via_polynomials(a, ids, cfg.limits); }, diverged);
        checks["agree"]  = !diverged;
        report["oracle"] = checks;
        if (diverged) {
          outcome.code = kExitTheorem;
        }
      }
      outcome.report = std::move(report);
      return outcome;
    }

    Outcome cmd_axioms(std::string const& file, std::string const& plus, std::string const& times) {
      auto const s  = load_structure(file);
      auto const& a = s.algebra;
      Json ops      = Json::object();
      for (auto const& op : a.signature()) {
        if (op.arity == 2) {
          ops[op.symbol] = to_json(check_hyperoperation(a, op.symbol));
        }
      }
      auto binary = [&](std::string const& sym) {
        auto i = a.signature().find(sym);
        return i && a.arity(*i) == 2;
      };
      Json axioms = nullptr;
      if (binary(plus) && binary(times)) {
        axioms = to_json(check_axioms(a, plus, times));
      }
      return {Json{{"command", "axioms"},
                   {"name", s.name},
                   {"operations", ops},
                   {"ring_axioms", axioms}}};
    }

    Outcome cmd_hyperring_alpha(RunConfig const& cfg,
                                std::string const& file,
                                std::string const& strategy,
                                std::string const& plus,
                                std::string const& times) {
      auto const s  = load_structure(file);
      auto const& a = s.algebra;
      auto const  st = strategy == "adjacent" ? HyperringStrategy::adjacent : HyperringStrategy::def1;
      auto const  result = alpha_star_hyperring(a, st, cfg.smax, plus, times);
      auto const  ring   = check_commutative_ring(factor(a, result.relation), plus, times);
      Json report{{"command", "hyperring-alpha"},
                  {"name", s.name},
                  {"strategy", strategy},
                  {"smax", cfg.smax},
                  {"relation", partition_json(s, result.relation)},
                  {"target", partition_json(s, result.target)},
                  {"converged_at", result.converged_at ? Json(*result.converged_at) : Json(nullptr)},
                  {"sound", result.sound},
                  {"factor_ring", to_json(ring)}};
      Outcome outcome{std::move(report)};
      if (!result.converged_at || !result.sound || !ring.commutative_ring()) {
        outcome.code = kExitTheorem;
      }
      return outcome;
    }

    StructureFile factor_file(StructureFile const& s, EquivRelation const& rho) {
      return named(factor(s.algebra, rho), s.name + "/" + rho.to_string(), block_names(s, rho));
    }

    Outcome cmd_factor(std::string const& file, std::string const& partition) {
      auto const s   = load_structure(file);
      auto const rho = EquivRelation::parse(partition, s.algebra.size());
      auto const f   = factor_file(s, rho);
      return {to_json(f), kExitOk, write_structure(f)};
    }

    std::vector<std::string> map_names(Homomorphism const&             h,
                                       std::vector<std::string> const& from,
                                       std::vector<std::string> const& to) {
      std::vector<std::string> out;
      for (std::size_t x = 0; x < h.map().size(); ++x) {
        out.push_back(from[x] + "->" + to[h(x)]);
      }
      return out;
    }

    Outcome cmd_colimit(std::string const& file, std::string const& identities) {
      auto const  df = load_diagram(file);
      auto const& d  = df.diagram;
      IdentitySet ids;
      if (!identities.empty()) {
        ids = load_identities(identities);
      }

      auto const c = colimit(d);
      std::vector<std::string> names(c.object.size());
      for (std::size_t i = d.size(); i-- > 0;) {
        for (std::size_t x = d.object(i).size(); x-- > 0;) {
          names[c.class_of[c.offsets[i] + x]] =
              std::to_string(i) + "." + df.objects[i].elements[x];
        }
      }
      auto const colim = named(c.object, "colimit", names);
      Json injections  = Json::array();
      for (std::size_t i = 0; i < d.size(); ++i) {
        injections.push_back(map_names(c.injections[i], df.objects[i].elements, names));
      }
      auto const top_iso = find_isomorphism(c.object, d.object(d.top())).has_value();

      auto const pres  = check_colimit_preservation(d, ids);
      auto const alpha = alpha_star_i(c.object, ids);
      auto const x     = named(pres.reflected_colimit, "reflected_colimit", block_names(colim, alpha));
      auto const y     = named(pres.colimit_of_images, "colimit_of_images");
      Json comparison  = Json::array();
      for (std::size_t i = 0; i < pres.comparison.size(); ++i) {
        comparison.push_back(x.elements[i] + "->" + y.elements[pres.comparison[i]]);
      }

      Json report{{"command", "colimit"},
                  {"objects", d.size()},
                  {"top", d.top()},
                  {"identities", identities_json(ids)},
                  {"colimit", to_json(colim)},
                  {"injections", injections},
                  {"isomorphic_to_top", top_iso},
                  {"preservation",
                   Json{{"reflected_colimit", to_json(x)},
                        {"colimit_of_images", to_json(y)},
                        {"comparison", comparison},
                        {"bijective", pres.bijective},
                        {"condition1_strict", pres.condition1_strict},
                        {"isomorphism", pres.isomorphism()}}}};
      Outcome outcome{std::move(report)};
      if (!top_iso || !pres.isomorphism()) {
        outcome.code = kExitTheorem;
      }
      return outcome;
    }

    std::vector<std::size_t> parse_numbers(std::string const& text) {
      std::vector<std::size_t> out;
      std::stringstream        in(text);
      std::string              item;
      while (std::getline(in, item, ',')) {
        try {
          std::size_t used = 0;
          out.push_back(std::stoul(item, &used));
          if (used != item.size()) {
            throw std::invalid_argument(item);
          }
        } catch (std::exception const&) {
          throw PreconditionError("invalid number '" + item + "'");
        }
      }
      return out;
    }

    Signature parse_ops(std::string const& text) {
      std::vector<Operation> ops;
      std::stringstream      in(text);
      std::string            item;
      while (std::getline(in, item, ',')) {
        auto const slash = item.rfind('/');
        if (slash == std::string::npos || slash == 0) {
          throw PreconditionError("expected symbol/arity, got '" + item + "'");
        }
        auto const arity = parse_numbers(item.substr(slash + 1));
        ops.push_back(Operation{item.substr(0, slash), arity.at(0)});
      }
      return Signature(std::move(ops));
    }

    struct GenOptions {
      std::string   kind;
      std::size_t   size     = 2;
      std::size_t   modulus  = 0;
      std::string   units;
      std::string   ops      = "plus/2,times/2";
      unsigned      multi    = 25;
    };

    Outcome cmd_gen(RunConfig const& cfg, GenOptions const& g) {
      StructureFile s;
      auto const    n = std::to_string(g.size);
      auto const    m = std::to_string(g.modulus);
      if (g.kind == "total") {
        s = named(total_hyperstructure(g.size), "total(" + n + ")");
      } else if (g.kind == "krasner") {
        s = named(krasner_from_ring(g.modulus, parse_numbers(g.units)),
                  "krasner(" + m + ";" + g.units + ")");
      } else if (g.kind == "cyclic-ring") {
        s = named(cyclic_ring(g.modulus), "Z" + m);
      } else if (g.kind == "cyclic-group") {
        s = named(cyclic_group(g.modulus), "Z" + m + "+");
      } else if (g.kind == "left-projection") {
        s = named(left_projection(g.size), "leftproj(" + n + ")");
      } else if (g.kind == "random") {
        s = named(random_multialgebra(g.size, parse_ops(g.ops), cfg.seed, g.multi),
                  "random(" + n + ";" + g.ops + ";seed=" + std::to_string(cfg.seed) + ")");
      } else {
        throw PreconditionError("unknown generator '" + g.kind + "'");
      }
      return {to_json(s), kExitOk, write_structure(s)};
    }

    void emit(RunConfig const& cfg, Outcome const& o, std::ostream& out) {
      if (cfg.format == OutputFormat::json) {
        out << o.report.dump(2) << "\n";
      } else if (!o.text.empty()) {
        out << o.text;
      } else {
        out << render_text(o.report);
      }
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fundamental relations, factor algebras and colimits of finite multialgebras",
                 "multalg"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig   cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-enum", cfg.limits.max_enumeration_carrier,
                   "Largest carrier for E_ua enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-sat", cfg.limits.max_saturation_carrier,
                   "Largest carrier for polynomial saturation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--sat-cap", cfg.limits.saturation_cap, "Saturation function cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomised generators")->capture_default_str();

    std::string file;
    std::string identities;
    bool        oracle = false;
    std::string plus   = "plus";
    std::string times  = "times";
    std::string strategy = "def1";
    std::string partition;
    GenOptions  gen;

    auto* validate = app.add_subcommand("validate", "Parse and check a structure file");
    validate->add_option("file", file)->required();

    auto* fundamental = app.add_subcommand("fundamental", "Fundamental or I-fundamental relation");
    fundamental->add_option("file", file)->required();
    fundamental->add_option("--identities", identities, "Identity set file");
    fundamental->add_flag("--oracle", oracle, "Cross-check against the brute-force routes");

    auto* axioms = app.add_subcommand("axioms", "Hyperoperation and hyperring axioms");
    axioms->add_option("file", file)->required();
    axioms->add_option("--plus", plus)->capture_default_str();
    axioms->add_option("--times", times)->capture_default_str();

    auto* hyperring = app.add_subcommand("hyperring-alpha", "Commutative-fundamental relation of a hyperring");
    hyperring->add_option("file", file)->required();
    hyperring->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"def1", "adjacent"}))
        ->capture_default_str();
    hyperring->add_option("--smax", cfg.smax, "Largest expression size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    hyperring->add_option("--plus", plus)->capture_default_str();
    hyperring->add_option("--times", times)->capture_default_str();

    auto* fac = app.add_subcommand("factor", "Factor multialgebra by a partition");
    fac->add_option("file", file)->required();
    fac->add_option("--partition", partition, "Partition such as {{0,1},{2}}")->required();

    auto* col = app.add_subcommand("colimit", "Colimit of a directed diagram and preservation check");
    col->add_option("file", file)->required();
    col->add_option("--identities", identities, "Identity set file");

    auto* g = app.add_subcommand("gen", "Generate a fixture structure");
    g->add_option("kind", gen.kind)
        ->required()
        ->check(CLI::IsMember(
            {"total", "krasner", "cyclic-ring", "cyclic-group", "left-projection", "random"}));
    g->add_option("--size", gen.size)->check(CLI::PositiveNumber)->capture_default_str();
    g->add_option("--modulus", gen.modulus);
    g->add_option("--units", gen.units, "Comma-separated subgroup of units");
    g->add_option("--ops", gen.ops, "Signature for random, e.g. plus/2,u/1")->capture_default_str();
    g->add_option("--multi-percent", gen.multi)->check(CLI::Range(0, 100))->capture_default_str();

    try {
      app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {
        app.exit(e, out, err);
        return kExitOk;
      }
      app.exit(e, out, err);
      return kExitUsage;
    }
    cfg.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    cfg.limits.max_expression_size = cfg.smax;

    try {
      Outcome o;
      if (*validate) {
        o = cmd_validate(file);
      } else if (*fundamental) {
        o = cmd_fundamental(cfg, file, identities, oracle);
      } else if (*axioms) {
        o = cmd_axioms(file, plus, times);
      } else if (*hyperring) {
        o = cmd_hyperring_alpha(cfg, file, strategy, plus, times);
      } else if (*fac) {
        o = cmd_factor(file, partition);
      } else if (*col) {
        o = cmd_colimit(file, identities);
      } else {
        o = cmd_gen(cfg, gen);
      }
      emit(cfg, o, out);
      return o.code;
    } catch (FormatError const& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (PreconditionError const& e) {
      err << "precondition: " << e.what() << "\n";
      return kExitPrecondition;
    } catch (GuardExceeded const& e) {
      err << "guard exceeded: " << e.what() << "\n";
      return kExitPrecondition;
    } catch (TheoremViolation const& e) {
      err << "theorem violation: " << e.what() << "\n";
      return kExitTheorem;
    }
  }

}  // namespace multalg::cli
