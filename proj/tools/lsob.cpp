#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "lsob/version.hpp"

using namespace lsob::cli;

namespace {

std::string joined_argv(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

void add_output_flags(CLI::App* cmd, Output& out) {
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
  cmd->add_option("--out", out.path, "Write to this file instead of stdout");
  cmd->add_option("--format", out.format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log-Sobolev constants and entropy inequalities for depolarizing channels"};
  app.set_version_flag("--version", std::string(lsob::kVersion));
  app.require_subcommand(1);
  app.footer(
      "Environment:\n"
      "  LSOB_THREADS  maximum number of worker threads (default: hardware concurrency).\n"
      "                Output never depends on the worker count.\n"
      "Exit codes: 0 success, 1 property failure, 2 usage or input error, 3 I/O error.");

  Output out;
  out.command_line = joined_argv(argc, argv);

  Alpha1Args alpha1;
  auto* a = app.add_subcommand("alpha1", "Closed-form alpha1 for a smallest eigenvalue or a spectrum file");
  a->add_option("--smin", alpha1.smin, "Smallest eigenvalue of sigma, in (0, 1)");
  a->add_option("spectrum-file", alpha1.spectrum_file, "File with one eigenvalue per line");
  a->add_flag("--oracle", alpha1.oracle, "Also run the brute-force oracle");
  a->add_option("--dim", alpha1.dim, "Dimension of the oracle state built from --smin")->capture_default_str();
  a->add_option("--seed", alpha1.seed, "Oracle sampling seed")->capture_default_str();
  a->add_option("--samples", alpha1.samples, "Random states drawn by the oracle")->capture_default_str();
  add_output_flags(a, out);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep-alpha1", "alpha1 and its lower bound at s_min = k / grid, k = 1..grid-1");
  s->add_option("--grid", sweep.grid, "Number of grid intervals on [0, 1]")->capture_default_str();
  add_output_flags(s, out);

  CompareArgs compare;
  auto* c = app.add_subcommand("concavity-compare", "Concavity gap against its lower bounds on random pairs");
  c->add_option("--dim", compare.dim, "Hilbert space dimension")->capture_default_str();
  c->add_option("--samples", compare.samples, "Number of random (sigma, rho) pairs")->capture_default_str();
  c->add_option("--grid", compare.grid, "Number of q values, evenly spaced on [0, 1]")->capture_default_str();
  c->add_option("--seed", compare.seed, "Sampling seed")->capture_default_str();
  add_output_flags(c, out);

  VerifyArgs verify;
  Output verify_out;
  verify_out.format = Format::json;
  auto* v = app.add_subcommand("verify", "Run the seeded property suites");
  v->add_option("--suite", verify.suite, "all, entropy, logsobolev, pinsker, concavity or shearer")
      ->capture_default_str();
  v->add_option("--seed", verify.seed, "Suite seed")->capture_default_str();
  v->add_option("--samples", verify.samples, "Override every per-property sample count (0 keeps defaults)")
      ->capture_default_str();
  add_output_flags(v, verify_out);

  PinskerArgs pinsker;
  auto* p = app.add_subcommand("pinsker", "Balance coefficient and improved Pinsker constant");
  p->add_option("spectrum-file", pinsker.spectrum_file, "File with one eigenvalue per line");
  p->add_option("--smax", pinsker.smax, "Largest eigenvalue; the rest is spread evenly over --dim - 1 levels");
  p->add_option("--dim", pinsker.dim, "Dimension used with --smax")->capture_default_str();
  p->add_flag("--tightness", pinsker.tightness, "Append the ratio sequence along the two-block family");
  add_output_flags(p, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  verify_out.command_line = out.command_line;
  if (a->parsed()) return cmd_alpha1(alpha1, out, std::cout, std::cerr);
  if (s->parsed()) return cmd_sweep_alpha1(sweep, out, std::cout, std::cerr);
  if (c->parsed()) return cmd_concavity_compare(compare, out, std::cout, std::cerr);
  if (v->parsed()) return cmd_verify(verify, verify_out, std::cout, std::cerr);
  if (p->parsed()) return cmd_pinsker(pinsker, out, std::cout, std::cerr);
  return kUsageError;
}
