#include <iostream>

#include <CLI11.hpp>

#include "convexa/app.hpp"
#include "convexa/error.hpp"

namespace {

void add_input(CLI::App* cmd, convexa::app::InputOptions& in, const char* what) {
  cmd->add_option(what, in.path, "code file in text format, or - for stdin")->required();
  cmd->add_flag("--json", in.json, "read the code as JSON");
  cmd->add_option("-n,--neurons", in.neurons, "number of neurons (default: inferred)");
}

}  // namespace

int main(int argc, char** argv) {
  namespace app = convexa::app;
  CLI::App cli{"Convexity of combinatorial neural codes with at most three maximal codewords"};
  cli.require_subcommand(1);

  convexa::RefineOptions refine;
  refine.budget = app::refine_budget_from_env();

  app::AnalyzeOptions analyze;
  auto* a = cli.add_subcommand("analyze", "analyze a code and print the analysis document");
  add_input(a, analyze.input, "code");
  a->add_flag("--realize", analyze.with_realization, "include a certified realization");

  app::RealizeOptions realize;
  auto* r = cli.add_subcommand("realize", "construct and certify a convex realization");
  add_input(r, realize.input, "code");
  r->add_option("--dim", realize.dim, "auto, 1 or 2")->check(CLI::IsMember({"auto", "1", "2"}));
  r->add_option("--svg", realize.svg_path, "write an SVG drawing");
  r->add_option("-o,--out", realize.out_path, "write the realization JSON here instead of stdout");

  app::VerifyOptions verify;
  auto* v = cli.add_subcommand("verify", "compare the code of a realization file with a target code");
  v->add_option("realization", verify.realization_path, "realization JSON")->required();
  add_input(v, verify.code, "code");

  app::EnumerateOptions enumerate;
  auto* e = cli.add_subcommand("enumerate", "summarize all small complexes up to symmetry");
  e->add_option("--neurons", enumerate.neurons, "number of neurons (at most 6)")->required();
  e->add_option("--facets", enumerate.facets, "number of facets (1 to 3)")->required();
  e->add_option("--out", enumerate.out_dir, "directory for per-complex JSON and summary.csv");
  e->add_option("--seed", enumerate.seed, "sampling seed");
  e->add_option("--samples", enumerate.samples, "sampled codes per complex when not exhaustive");
  e->add_flag("--certify", enumerate.certify, "certify every constructed realization");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = cli.exit(err);
    return rc == 0 ? 0 : app::kParseError;
  }
  analyze.refine = refine;
  realize.refine = refine;

  try {
    if (*a) return app::cmd_analyze(analyze, std::cout, std::cerr);
    if (*r) return app::cmd_realize(realize, std::cout, std::cerr);
    if (*v) return app::cmd_verify(verify, std::cout, std::cerr);
    if (*e) return app::cmd_enumerate(enumerate, std::cout, std::cerr);
  } catch (const convexa::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.code() == convexa::Errc::Parse ? app::kParseError : app::kFailure;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return app::kFailure;
  }
  return app::kFailure;
}
