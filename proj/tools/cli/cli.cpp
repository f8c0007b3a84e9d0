#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "akizuki/completion.hpp"
#include "akizuki/config.hpp"
#include "akizuki/duality.hpp"
#include "akizuki/errors.hpp"
#include "akizuki/expression.hpp"
#include "akizuki/literals.hpp"
#include "akizuki/properties.hpp"
#include "akizuki/series_io.hpp"

namespace akizuki::cli {

namespace {

enum class OutputMode { pretty, machine };

// key = value lines; pretty mode prints only the primary result unless asked for more.
class Printer {
 public:
  Printer(std::ostream& out, OutputMode mode) : out_(out), mode_(mode) {}

  bool machine() const { return mode_ == OutputMode::machine; }

  void field(const std::string& key, const std::string& value) { out_ << key << " = " << value << '\n'; }
  void result(const std::string& value) {
    if (machine()) {
      field("result", value);
    } else {
      out_ << value << '\n';
    }
  }
  void detail(const std::string& key, const std::string& value) {
    if (machine()) field(key, value);
  }
  std::ostream& raw() { return out_; }

 private:
  std::ostream& out_;
  OutputMode mode_;
};

struct Options {
  std::string config_path;
  std::optional<std::string> field;
  std::optional<std::size_t> precision;
  OutputMode output = OutputMode::pretty;
  std::uint64_t seed = 1;
  std::size_t count = 100;
};

AkizukiInstance build_instance(const Options& opts) {
  InstanceConfig config;
  if (!opts.config_path.empty()) config = load_instance_config(opts.config_path);
  if (opts.field) config.field = *opts.field;
  if (opts.precision) config.precision = *opts.precision;
  return config.build();
}

NormalForm eval_text(const AkizukiInstance& inst, const std::string& text, std::size_t level) {
  return eval_expression(inst, parse_expression(text), level);
}

void print_h1(Printer& p, const H1Class& omega) {
  p.result(format_h1(omega));
  p.detail("x", format_series(omega.numerator().x()));
  p.detail("y", format_series(omega.numerator().y()));
  p.detail("exponent", std::to_string(omega.exponent()));
  p.detail("zero", omega.is_zero() ? "true" : "false");
}

void print_hom(Printer& p, const ContinuousHom& hom) {
  p.result(format_hom(hom));
  p.detail("level", std::to_string(hom.level()));
  p.detail("alpha", format_series(hom.alpha()));
  p.detail("beta", format_series(hom.beta()));
}

void print_pair(Printer& p, const ResiduePair& pair) {
  p.result(format_pair(pair));
  p.detail("sigma", format_series(pair.sigma));
  p.detail("rho", format_series(pair.rho));
  p.detail("precision", std::to_string(pair.precision()));
}

void print_comp(Printer& p, const CompletionElement& c) {
  p.result(format_comp(c));
  p.detail("rho", format_series(c.rho));
  p.detail("sigma", format_series(c.sigma));
}

void print_bool(Printer& p, bool value) { p.result(value ? "true" : "false"); }

int print_reports(Printer& p, const std::vector<props::SuiteReport>& reports) {
  bool ok = true;
  for (const auto& report : reports) {
    for (const auto& r : report.results) {
      const std::string name = report.suite + "." + r.name;
      if (p.machine()) {
        p.field(name, std::string(r.passed() ? "pass" : "fail") + " " + std::to_string(r.cases_run));
        if (!r.passed()) p.field(name + ".counterexample", *r.counterexample);
      } else {
        p.raw() << (r.passed() ? "PASS " : "FAIL ") << name << " (" << r.cases_run << " cases)\n";
        if (!r.passed()) p.raw() << "  counterexample: " << *r.counterexample << '\n';
      }
      ok = ok && r.passed();
    }
  }
  if (p.machine()) {
    p.field("status", ok ? "pass" : "fail");
  } else {
    p.raw() << (ok ? "all properties passed" : "property failures") << '\n';
  }
  return ok ? kSuccess : kSelftestFailure;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic in Akizuki's ring C_M, its local cohomology and local duality", "akizuki"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::string output = "pretty";
  app.add_option("--config", opts.config_path, "Instance configuration file");
  app.add_option("--field", opts.field, "Coefficient field: q or fp:<prime>");
  app.add_option("--prec", opts.precision, "Working precision N of the instance");
  app.add_option("--output", output, "Output mode")->check(CLI::IsMember({"pretty", "machine"}));

  // Each command stores its action here; it runs after parsing so errors map to exit codes.
  std::function<int(const AkizukiInstance&, Printer&)> action;

  std::string expr_text;
  std::optional<std::size_t> level;
  auto* nf = app.add_subcommand("nf", "Normal form X + Y w of an expression in t, w, g0, g1, ...");
  nf->add_option("expr", expr_text)->required();
  nf->add_option("--level", level, "Level m of the normal form (default N)");
  nf->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      const auto f = eval_text(inst, expr_text, level.value_or(inst.precision()));
      if (p.machine()) {
        p.field("x", format_series(f.x()));
        p.field("y", format_series(f.y()));
        p.field("level", std::to_string(f.level()));
      } else {
        p.raw() << "X = " << format_series(f.x()) << "\nY = " << format_series(f.y()) << "\nlevel = " << f.level()
                << '\n';
      }
      return kSuccess;
    };
  });

  std::string pair_text;
  std::string arg_text;
  std::string arg2_text;
  auto* res = app.add_subcommand("res", "Residue res_{sigma,rho} of a class");
  res->add_option("pair", pair_text)->required();
  res->add_option("class", arg_text)->required();
  res->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      const auto pair = parse_pair(pair_text, inst.field(), inst.precision());
      p.result(format_tail(residue(pair, parse_h1(arg_text, inst.field()))));
      return kSuccess;
    };
  });

  auto* duality = app.add_subcommand("duality", "Local duality Phi_{sigma,rho} and its inverse");
  duality->require_subcommand(1);
  auto* forward = duality->add_subcommand("forward", "Phi(class) as a continuous homomorphism");
  forward->add_option("pair", pair_text)->required();
  forward->add_option("class", arg_text)->required();
  forward->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      const auto pair = parse_pair(pair_text, inst.field(), inst.precision());
      print_hom(p, phi(inst, pair, parse_h1(arg_text, inst.field())));
      return kSuccess;
    };
  });
  auto* inverse = duality->add_subcommand("inverse", "Phi^-1(hom) as a class");
  inverse->add_option("pair", pair_text)->required();
  inverse->add_option("hom", arg_text)->required();
  inverse->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      const auto pair = parse_pair(pair_text, inst.field(), inst.precision());
      print_h1(p, phi_inverse(inst, pair, parse_hom(arg_text, inst.field())));
      return kSuccess;
    };
  });

  auto* hom_eval_cmd = app.add_subcommand("hom-eval", "Evaluate a continuous homomorphism at an expression");
  hom_eval_cmd->add_option("hom", arg_text)->required();
  hom_eval_cmd->add_option("expr", expr_text)->required();
  hom_eval_cmd->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      const auto h = parse_hom(arg_text, inst.field());
      p.result(format_tail(hom_eval(h, eval_text(inst, expr_text, inst.precision()))));
      return kSuccess;
    };
  });

  auto* h1 = app.add_subcommand("h1", "Generalized fractions in H^1");
  h1->require_subcommand(1);
  auto* h1_eq_cmd = h1->add_subcommand("eq", "Equality of two classes");
  h1_eq_cmd->add_option("a", arg_text)->required();
  h1_eq_cmd->add_option("b", arg2_text)->required();
  h1_eq_cmd->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      print_bool(p, h1_eq(parse_h1(arg_text, inst.field()), parse_h1(arg2_text, inst.field())));
      return kSuccess;
    };
  });
  auto* h1_zero_cmd = h1->add_subcommand("zero", "Vanishing of a class");
  h1_zero_cmd->add_option("class", arg_text)->required();
  h1_zero_cmd->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      print_bool(p, h1_is_zero(parse_h1(arg_text, inst.field())));
      return kSuccess;
    };
  });
  auto* h1_act_cmd = h1->add_subcommand("act", "Module action f * class");
  h1_act_cmd->add_option("expr", expr_text)->required();
  h1_act_cmd->add_option("class", arg_text)->required();
  h1_act_cmd->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      print_h1(p, h1_act(inst, eval_text(inst, expr_text, inst.precision()), parse_h1(arg_text, inst.field())));
      return kSuccess;
    };
  });

  std::optional<std::string> unit_text;
  auto* complete = app.add_subcommand("complete", "The completion ring A^[X]/(X + w)^2 as pairs comp(rho;sigma)");
  complete->require_subcommand(1);
  auto* comp_add_cmd = complete->add_subcommand("add", "Sum of two elements");
  comp_add_cmd->add_option("u", arg_text)->required();
  comp_add_cmd->add_option("v", arg2_text)->required();
  comp_add_cmd->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      const auto n = inst.precision();
      print_comp(p, comp_add(parse_comp(arg_text, inst.field(), n), parse_comp(arg2_text, inst.field(), n)));
      return kSuccess;
    };
  });
  auto* comp_mul_cmd = complete->add_subcommand("mul", "Star product; --unit selects a non-standard unit");
  comp_mul_cmd->add_option("u", arg_text)->required();
  comp_mul_cmd->add_option("v", arg2_text)->required();
  comp_mul_cmd->add_option("--unit", unit_text, "Unit element comp(rho;sigma) with rho invertible");
  comp_mul_cmd->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      const auto n = inst.precision();
      const auto u = parse_comp(arg_text, inst.field(), n);
      const auto v = parse_comp(arg2_text, inst.field(), n);
      print_comp(p, unit_text ? comp_mul_general(inst, u, v, parse_comp(*unit_text, inst.field(), n))
                              : comp_mul(inst, u, v));
      return kSuccess;
    };
  });
  auto* comp_embed_cmd = complete->add_subcommand("embed", "Image of an expression of C_M");
  comp_embed_cmd->add_option("expr", expr_text)->required();
  comp_embed_cmd->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      print_comp(p, comp_embed(inst, eval_text(inst, expr_text, inst.precision())));
      return kSuccess;
    };
  });

  std::optional<std::string> twist_text;
  auto* extract = app.add_subcommand("extract", "Recover (sigma, rho) from the map Phi_{sigma,rho}");
  extract->add_option("pair", pair_text)->required();
  extract->add_option("--level", level, "Target precision n (default N)");
  extract->add_option("--twist", twist_text, "Precompose with multiplication by this expression");
  extract->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      const auto pair = parse_pair(pair_text, inst.field(), inst.precision());
      std::optional<NormalForm> twist;
      if (twist_text) twist = eval_text(inst, *twist_text, inst.precision());
      const DualityMap map = [&](const H1Class& omega) {
        return phi(inst, pair, twist ? h1_act(inst, *twist, omega) : omega);
      };
      print_pair(p, endo_extract(inst, map, level.value_or(inst.precision())));
      return kSuccess;
    };
  });

  std::string suite;
  auto* selftest = app.add_subcommand("selftest", "Seeded property suites");
  selftest->add_option("suite", suite, "series, ring, cohomology, duality, completion or all")->required();
  selftest->add_option("--seed", opts.seed, "Seed of the case generator");
  selftest->add_option("--count", opts.count, "Cases per property");
  selftest->callback([&] {
    action = [&](const AkizukiInstance& inst, Printer& p) {
      return print_reports(p, props::run_suite(inst, suite, opts.seed, opts.count));
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  opts.output = output == "machine" ? OutputMode::machine : OutputMode::pretty;
  Printer printer(out, opts.output);
  try {
    const auto inst = build_instance(opts);
    if (printer.machine()) {
      printer.field("field", inst.field().descriptor());
      printer.field("precision", std::to_string(inst.precision()));
    }
    return action(inst, printer);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace akizuki::cli
