#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "lsob/concavity.hpp"
#include "lsob/entropy.hpp"
#include "lsob/errors.hpp"
#include "lsob/logsobolev.hpp"
#include "lsob/parallel.hpp"
#include "lsob/pinsker.hpp"
#include "lsob/sampler.hpp"
#include "lsob/verify.hpp"
#include "lsob/version.hpp"

namespace lsob::cli {

namespace {

constexpr double kSpectrumSumTol = 1e-8;

template <class Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPropertyFailure;
  }
}

void write_text(const std::string& text, const Output& out, std::ostream& stream) {
  if (out.path.empty()) {
    stream << text;
    return;
  }
  std::ofstream file(out.path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + out.path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing '" + out.path + "'");
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  return out;
}

std::string real(double v) { return format_real(v); }

Spectrum spectrum_with_extreme(double value, int dim, bool is_min) {
  if (dim < 2) throw ArgumentError("--dim must be >= 2");
  if (!(value > 0.0 && value < 1.0)) throw ArgumentError("eigenvalue must lie in (0, 1)");
  const double rest = (1.0 - value) / (dim - 1);
  if (is_min ? value > rest + 1e-15 : value < rest - 1e-15) {
    throw ArgumentError(fmt::format("{} {} is not the {} eigenvalue for --dim {}", is_min ? "--smin" : "--smax",
                                    real(value), is_min ? "smallest" : "largest", dim));
  }
  std::vector<double> v(dim, rest);
  v[0] = value;
  return Spectrum(std::move(v));
}

}  // namespace

std::vector<double> read_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read spectrum file '" + path + "'");
  std::vector<double> values;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(v)) {
      throw ArgumentError(fmt::format("{}:{}: expected one real number, got '{}'", path, number, token));
    }
    if (v < 0.0) throw ArgumentError(fmt::format("{}:{}: negative eigenvalue {}", path, number, token));
    values.push_back(v);
  }
  if (in.bad()) throw IoError("error reading spectrum file '" + path + "'");
  if (values.empty()) throw ArgumentError("spectrum file '" + path + "' is empty");
  double sum = 0.0;
  for (double v : values) sum += v;
  if (std::abs(sum - 1.0) > kSpectrumSumTol) {
    throw ArgumentError(fmt::format("spectrum in '{}' sums to {}, expected 1 within 1e-8", path, real(sum)));
  }
  for (double& v : values) v /= sum;
  return values;
}

SweepResult alpha1_report(const Alpha1Args& args) {
  if (args.smin.has_value() == !args.spectrum_file.empty()) {
    throw ArgumentError("alpha1 needs exactly one of --smin or a spectrum file");
  }
  std::vector<std::string> columns{"s_min", "alpha1", "argmin_x", "lower_bound"};
  if (args.oracle) {
    columns.insert(columns.end(), {"oracle_alpha1", "oracle_subset_alpha1", "oracle_sampled_alpha1",
                                   "abs_difference", "oracle_witness_subset"});
  }
  SweepResult result("alpha1", columns);

  std::optional<Spectrum> spectrum;
  double s_min = 0.0;
  if (args.smin) {
    s_min = *args.smin;
    if (args.oracle) spectrum = spectrum_with_extreme(s_min, args.dim, true);
    result.add_metadata("smin", real(s_min));
  } else {
    spectrum = Spectrum(read_spectrum_file(args.spectrum_file));
    s_min = spectrum->min();
    result.add_metadata("spectrum_file", args.spectrum_file);
  }
  const Alpha1Result closed = alpha1_depolarizing(s_min);
  std::vector<Cell> row{s_min, closed.alpha1, closed.argmin_x, closed.lower_bound};
  if (args.oracle) {
    BruteForceOptions options;
    options.seed = args.seed;
    options.random_samples = args.samples;
    const Alpha1Result oracle = alpha1_bruteforce(DensityMatrix::diagonal(spectrum->values()), options);
    row.insert(row.end(), {oracle.alpha1, oracle.subset_alpha1, oracle.sampled_alpha1,
                           std::abs(oracle.alpha1 - closed.alpha1), join(oracle.witness_subset, ';')});
    result.add_metadata("dim", std::to_string(spectrum->size()));
    result.add_metadata("seed", std::to_string(args.seed));
    result.add_metadata("oracle_samples", std::to_string(args.samples));
  }
  result.add_row(std::move(row));
  return result;
}

SweepResult sweep_alpha1(const SweepArgs& args) {
  if (args.grid < 2) throw ArgumentError("--grid must be >= 2");
  SweepResult result("sweep-alpha1", {"s_min", "alpha1", "lower_bound"});
  result.add_metadata("grid", std::to_string(args.grid));
  std::vector<Alpha1Result> rows(args.grid - 1);
  parallel_for(rows.size(), [&](std::size_t k) {
    rows[k] = alpha1_depolarizing(static_cast<double>(k + 1) / args.grid);
  });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    result.add_row({static_cast<double>(k + 1) / args.grid, rows[k].alpha1, rows[k].lower_bound});
  }
  return result;
}

SweepResult concavity_compare(const CompareArgs& args) {
  if (args.dim < 2) throw ArgumentError("--dim must be >= 2");
  if (args.samples < 1) throw ArgumentError("--samples must be >= 1");
  if (args.grid < 2) throw ArgumentError("--grid must be >= 2");
  SweepResult result("concavity-compare", {"sample", "q", "gap", "thm2_sigma_reference", "thm2_rho_reference",
                                           "thm2", "kim_trace", "kim_relent", "combined_trace"});
  result.add_metadata("dim", std::to_string(args.dim));
  result.add_metadata("samples", std::to_string(args.samples));
  result.add_metadata("grid", std::to_string(args.grid));
  result.add_metadata("seed", std::to_string(args.seed));
  result.add_metadata("ensemble", "hilbert_schmidt");
  result.add_metadata("kim_exclusion_halfwidth", real(kKimExclusionHalfwidth));

  std::vector<std::vector<std::vector<Cell>>> blocks(args.samples);
  parallel_for(blocks.size(), [&](std::size_t i) {
    Rng rng(args.seed, i);
    DensityMatrix sigma = random_hilbert_schmidt(args.dim, rng);
    DensityMatrix rho = random_hilbert_schmidt(args.dim, rng);
    const ConcavityPair pair(std::move(sigma), std::move(rho));
    for (int k = 0; k < args.grid; ++k) {
      const double q = static_cast<double>(k) / (args.grid - 1);
      const BoundReport r = pair.report(q);
      Cell kim_relent = std::string("indeterminate");
      if (r.kim_relent_bound) {
        kim_relent = r.kim_relent_bound->is_finite() ? Cell(r.kim_relent_bound->value()) : Cell(std::string("inf"));
      }
      blocks[i].push_back({static_cast<std::int64_t>(i), q, r.gap, r.thm2_sigma_branch, r.thm2_rho_branch,
                           r.thm2_bound, r.kim_trace_bound, kim_relent, r.combined_trace_bound});
    }
  });
  for (auto& block : blocks) {
    for (auto& row : block) result.add_row(std::move(row));
  }
  return result;
}

SweepResult pinsker_summary(const PinskerArgs& args) {
  if (args.smax.has_value() == !args.spectrum_file.empty()) {
    throw ArgumentError("pinsker needs exactly one of --smax or a spectrum file");
  }
  SweepResult result("pinsker", {"row", "pi", "phi", "constant", "witness_subset", "epsilon", "trace_distance",
                                 "ratio"});
  Spectrum spectrum = args.smax ? spectrum_with_extreme(*args.smax, args.dim, false)
                                : Spectrum(read_spectrum_file(args.spectrum_file));
  if (args.smax) {
    result.add_metadata("smax", real(*args.smax));
    result.add_metadata("dim", std::to_string(args.dim));
  } else {
    result.add_metadata("spectrum_file", args.spectrum_file);
  }
  const PinskerReport report = pinsker_report(spectrum);
  const std::string witness = join(report.witness_subset, ';');
  const std::string blank;
  result.add_row({std::string("summary"), report.pi_sigma, report.phi_value, report.constant, witness, blank, blank,
                  blank});
  if (args.tightness) {
    if (spectrum.min() <= 0.0) throw PreconditionError("--tightness requires a full-rank spectrum");
    std::vector<double> eps{0.1, 0.03, 0.01, 3e-3, 1e-3, 1e-4};
    if (1.0 - 2.0 * report.pi_sigma > 1e-12) eps.push_back(1.0 - 2.0 * report.pi_sigma);
    std::sort(eps.begin(), eps.end(), std::greater<>());
    const DensityMatrix sigma = DensityMatrix::diagonal(spectrum.values());
    for (const TightnessEntry& e : tightness_sequence(sigma, eps)) {
      Cell ratio = e.ratio ? Cell(*e.ratio) : Cell(std::string("n/a"));
      result.add_row({std::string("tightness"), report.pi_sigma, report.phi_value, report.constant, witness,
                      e.epsilon, e.trace_distance, ratio});
    }
  }
  return result;
}

void emit(SweepResult result, const Output& out, std::ostream& stream) {
  result.add_metadata("version", std::string(kVersion));
  if (!out.command_line.empty()) result.add_metadata("command_line", out.command_line);
  std::ostringstream text;
  if (out.format == Format::json) {
    text << result.to_json().dump(2) << '\n';
  } else {
    result.write_csv(text);
  }
  write_text(text.str(), out, stream);
}

int cmd_alpha1(const Alpha1Args& args, const Output& out, std::ostream& stream, std::ostream& err) {
  return guarded(err, [&] {
    emit(alpha1_report(args), out, stream);
    return kOk;
  });
}

int cmd_sweep_alpha1(const SweepArgs& args, const Output& out, std::ostream& stream, std::ostream& err) {
  return guarded(err, [&] {
    emit(sweep_alpha1(args), out, stream);
    return kOk;
  });
}

int cmd_concavity_compare(const CompareArgs& args, const Output& out, std::ostream& stream, std::ostream& err) {
  return guarded(err, [&] {
    emit(concavity_compare(args), out, stream);
    return kOk;
  });
}

int cmd_pinsker(const PinskerArgs& args, const Output& out, std::ostream& stream, std::ostream& err) {
  return guarded(err, [&] {
    emit(pinsker_summary(args), out, stream);
    return kOk;
  });
}

int cmd_verify(const VerifyArgs& args, const Output& out, std::ostream& stream, std::ostream& err) {
  return guarded(err, [&] {
    const std::optional<Suite> suite = parse_suite(args.suite);
    if (!suite) {
      throw ArgumentError("unknown suite '" + args.suite +
                          "'; expected all, entropy, logsobolev, pinsker, concavity or shearer");
    }
    if (args.samples < 0) throw ArgumentError("--samples must be >= 0");
    VerifyOptions options;
    options.seed = args.seed;
    options.samples = args.samples;
    const std::vector<PropertyResult> results = run_suite(*suite, options);
    const bool passed = all_passed(results);

    std::ostringstream text;
    if (out.format == Format::json) {
      nlohmann::ordered_json j;
      j["schema_version"] = kSchemaVersion;
      j["command"] = "verify";
      j["metadata"] = {{"suite", args.suite},
                       {"seed", std::to_string(args.seed)},
                       {"samples", std::to_string(args.samples)},
                       {"version", std::string(kVersion)}};
      if (!out.command_line.empty()) j["metadata"]["command_line"] = out.command_line;
      j["passed"] = passed;
      nlohmann::ordered_json props = nlohmann::ordered_json::array();
      for (const PropertyResult& r : results) {
        nlohmann::ordered_json p;
        p["name"] = r.name;
        p["suite"] = r.suite;
        p["passed"] = r.passed;
        p["expected_failure"] = r.expected_failure;
        if (std::isfinite(r.worst_slack)) {
          p["worst_slack"] = r.worst_slack;
        } else {
          p["worst_slack"] = format_real(r.worst_slack);
        }
        p["threshold"] = r.threshold;
        p["samples"] = r.samples;
        if (!r.witness.empty()) {
          nlohmann::ordered_json w = nlohmann::ordered_json::object();
          for (const auto& [key, values] : r.witness) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (double v : values) {
              if (std::isfinite(v)) {
                arr.push_back(v);
              } else {
                arr.push_back(format_real(v));
              }
            }
            w[key] = std::move(arr);
          }
          p["witness"] = std::move(w);
        }
        props.push_back(std::move(p));
      }
      j["properties"] = std::move(props);
      text << j.dump(2) << '\n';
    } else {
      SweepResult table("verify", {"name", "suite", "passed", "expected_failure", "worst_slack", "threshold",
                                   "samples"});
      table.add_metadata("suite", args.suite);
      table.add_metadata("seed", std::to_string(args.seed));
      table.add_metadata("samples", std::to_string(args.samples));
      table.add_metadata("version", std::string(kVersion));
      if (!out.command_line.empty()) table.add_metadata("command_line", out.command_line);
      for (const PropertyResult& r : results) {
        table.add_row({r.name, r.suite, std::int64_t{r.passed}, std::int64_t{r.expected_failure}, r.worst_slack,
                       r.threshold, std::int64_t{r.samples}});
      }
      table.write_csv(text);
    }
    write_text(text.str(), out, stream);
    for (const PropertyResult& r : results) {
      if (!r.passed) err << "FAILED " << r.suite << '/' << r.name << " worst_slack " << real(r.worst_slack) << '\n';
    }
    return passed ? kOk : kPropertyFailure;
  });
}

}  // namespace lsob::cli
