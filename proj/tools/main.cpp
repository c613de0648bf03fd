#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

#ifndef FEEC_DEFAULT_GOLDEN_DIR
#define FEEC_DEFAULT_GOLDEN_DIR "tests/golden"
#endif

using namespace feec;

namespace {

void add_family_options(CLI::App* cmd, std::string& family, FamilyId& id) {
  cmd->add_option("--family", family, "q-, s or s-")->required()->check(CLI::IsMember({"q-", "s", "s-"}));
  cmd->add_option("--n", id.n, "ambient dimension (2 or 3)")->required();
  cmd->add_option("--k", id.k, "form order")->required();
  cmd->add_option("--r", id.r, "polynomial order")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computational bases for Q-, S and S- finite element differential forms on the square and cube"};
  app.require_subcommand(1);

  std::string family;
  cli::BasisOptions basis_opt{{Family::S, 1, 0, 3}};
  auto* basis = app.add_subcommand("basis", "print an assembled basis");
  add_family_options(basis, family, basis_opt.family);
  basis->add_option("--format", basis_opt.format, "text, json, latex or csv")
      ->check(CLI::IsMember({"text", "json", "latex", "csv"}));
  basis->add_option("--out", basis_opt.out, "write to this file instead of stdout");

  cli::VerifyOptions verify_opt{{Family::S, 1, 0, 3}};
  auto* verify = app.add_subcommand("verify", "run the basis verification for one family");
  add_family_options(verify, family, verify_opt.family);
  verify->add_option("--candidate", verify_opt.candidate,
                     "verify this list (basis JSON or one form per line) instead of the built-in basis");

  cli::SelftestOptions selftest_opt;
  selftest_opt.golden_dir = cli::golden_dir(FEEC_DEFAULT_GOLDEN_DIR);
  auto* selftest = app.add_subcommand("selftest", "verify every family over a parameter sweep");
  selftest->add_option("--scope", selftest_opt.scope, "quick or full")->check(CLI::IsMember({"quick", "full"}));
  selftest->add_option("--golden-dir", selftest_opt.golden_dir, "golden file directory");
  selftest->add_flag("--regen-golden", selftest_opt.regenerate, "rewrite rendered golden files instead of comparing");

  cli::OpOptions op_opt;
  auto* op = app.add_subcommand("op", "apply d, kappa or trace to a form");
  op->add_option("--apply", op_opt.ops, "comma-separated chain, e.g. d or kappa,d or trace")->required();
  op->add_option("--face", op_opt.face, "face for trace, e.g. x=1 or y=1,z=-1");
  op->add_option("--form", op_opt.expression, "form expression, e.g. \"(x+1) dy\"");
  op->add_option("--json", op_opt.json_path, "form JSON file, - for stdin");
  op->add_option("--n", op_opt.n, "ambient dimension for --form");
  op->add_option("--k", op_opt.k, "form order for --form (needed only for the zero form)");
  op->add_option("--format", op_opt.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsage;
  }

  if (*basis) {
    basis_opt.family.family = parse_family(family);
    return cli::cmd_basis(basis_opt, std::cout, std::cerr);
  }
  if (*verify) {
    verify_opt.family.family = parse_family(family);
    return cli::cmd_verify(verify_opt, std::cout, std::cerr);
  }
  if (*selftest) return cli::cmd_selftest(selftest_opt, std::cout, std::cerr);
  return cli::cmd_op(op_opt, std::cin, std::cout, std::cerr);
}
