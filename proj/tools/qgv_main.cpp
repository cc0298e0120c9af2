// qgv: verification CLI for the deformed self-duality engine.
//
//   qgv verify <suite> [--max-deg N] [--max-len N] [--q <rational s>]
//                      [--seed N] [--format json|text|tap] [--dump-F]
//   qgv nf --algebra <name> "<expr>" [--q <rational s>] [--q-style]
//
// Exit codes: 0 all non-exploratory checks pass, 1 check failure,
// 2 usage or parse error.

#include <CLI11.hpp>

#include "qgv/espace.hpp"
#include "qgv/hspace.hpp"
#include "qgv/parser.hpp"
#include "qgv/qgauge.hpp"
#include "qgv/qsphere.hpp"
#include "qgv/suites.hpp"

#include <iostream>

namespace {

qgv::Rational parse_rational_arg(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return qgv::Rational(qgv::BigInt(text));
  return qgv::Rational(qgv::BigInt(text.substr(0, slash)), qgv::BigInt(text.substr(slash + 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-group self-duality verification engine"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "tensor|sphere|espace|gauge|instanton|hspace|engine|all")
      ->required();
  int max_deg = 4, max_len = 3;
  verify->add_option("--max-deg", max_deg, "monomial degree bound");
  verify->add_option("--max-len", max_len, "word length bound");
  std::string qval;
  verify->add_option("--q", qval, "specialize at rational s");
  uint64_t seed = 1;
  verify->add_option("--seed", seed, "random seed");
  std::string format = "text";
  verify->add_option("--format", format, "json|text|tap")
      ->check(CLI::IsMember({"json", "text", "tap"}));
  bool dump_F = false;
  verify->add_flag("--dump-F", dump_F, "emit the curvature components");
  std::string inject;
  verify->add_option("--inject-fault", inject, "damage a named rule set (negative-control hook)");

  // nf
  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  std::string algebra, expr, nf_qval;
  nf->add_option("--algebra", algebra, "sphere|espace|gauge|hspace")->required();
  nf->add_option("expr", expr, "expression")->required();
  nf->add_option("--q", nf_qval, "specialize at rational s");
  bool q_style = false;
  nf->add_flag("--q-style", q_style, "print even powers of s as powers of q");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      qgv::SuiteConfig cfg;
      cfg.suite = suite;
      cfg.max_deg = max_deg;
      cfg.max_len = max_len;
      cfg.seed = seed;
      cfg.dump_F = dump_F;
      cfg.inject_fault = inject;
      if (!qval.empty()) cfg.s0 = parse_rational_arg(qval);
      std::string dump;
      qgv::Report rep = qgv::run_suite(cfg, &dump);
      qgv::ReportFormat fmt = format == "json"   ? qgv::ReportFormat::Json
                              : format == "tap" ? qgv::ReportFormat::Tap
                                                : qgv::ReportFormat::Text;
      std::cout << qgv::emit_report(rep, fmt);
      if (dump_F && !dump.empty()) std::cout << dump;
      return rep.all_pass() ? 0 : 1;
    }
    // nf
    std::optional<qgv::Rational> s0;
    if (!nf_qval.empty()) s0 = parse_rational_arg(nf_qval);
    qgv::AlgebraPtr alg;
    if (algebra == "sphere") {
      alg = qgv::build_sphere(s0).alg;
    } else if (algebra == "espace") {
      alg = qgv::build_espace(s0).alg;
    } else if (algebra == "gauge") {
      alg = qgv::build_qgauge(s0).alg;
    } else if (algebra == "hspace") {
      alg = qgv::build_hspace(s0).alg;
    } else {
      std::cerr << "unknown algebra: " << algebra << "\n";
      return 2;
    }
    qgv::ExprContext ctx{alg.get(), qgv::default_resolver(alg)};
    qgv::NCPoly p = qgv::parse_expr(ctx, expr);
    std::cout << qgv::print_ncpoly(alg->normal_form(p),
                                   q_style ? qgv::ScalarStyle::Q : qgv::ScalarStyle::S)
              << "\n";
    return 0;
  } catch (const qgv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
