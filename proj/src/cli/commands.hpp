#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/sweep_result.hpp"

namespace lsob::cli {

enum ExitCode { kOk = 0, kPropertyFailure = 1, kUsageError = 2, kIoError = 3 };

enum class Format { csv, json };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Where a command writes and how it identifies itself in metadata.
struct Output {
  std::string path;  // empty: the stream passed to the command
  Format format = Format::csv;
  std::string command_line;
};

struct Alpha1Args {
  std::optional<double> smin;
  std::string spectrum_file;
  bool oracle = false;
  int dim = 2;
  std::uint64_t seed = 0;
  int samples = 10000;
};

struct SweepArgs {
  int grid = 200;
};

struct CompareArgs {
  int dim = 10;
  int samples = 2;
  int grid = 21;
  std::uint64_t seed = 0;
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 7;
  int samples = 0;
};

struct PinskerArgs {
  std::string spectrum_file;
  std::optional<double> smax;
  int dim = 2;
  bool tightness = false;
};

/// One real per line (blank lines skipped); the values must be
/// nonnegative and sum to 1 within 1e-8. Returned renormalized.
/// Throws ArgumentError on malformed content and IoError if unreadable.
std::vector<double> read_spectrum_file(const std::string& path);

SweepResult alpha1_report(const Alpha1Args& args);
SweepResult sweep_alpha1(const SweepArgs& args);
SweepResult concavity_compare(const CompareArgs& args);
SweepResult pinsker_summary(const PinskerArgs& args);

/// Emits `result` per `out`; throws IoError if the file cannot be written.
void emit(SweepResult result, const Output& out, std::ostream& stream);

/// Each command returns an ExitCode and reports errors on `err`.
int cmd_alpha1(const Alpha1Args& args, const Output& out, std::ostream& stream, std::ostream& err);
int cmd_sweep_alpha1(const SweepArgs& args, const Output& out, std::ostream& stream, std::ostream& err);
int cmd_concavity_compare(const CompareArgs& args, const Output& out, std::ostream& stream, std::ostream& err);
int cmd_verify(const VerifyArgs& args, const Output& out, std::ostream& stream, std::ostream& err);
int cmd_pinsker(const PinskerArgs& args, const Output& out, std::ostream& stream, std::ostream& err);

}  // namespace lsob::cli
