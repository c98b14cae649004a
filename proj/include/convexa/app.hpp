#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "convexa/code.hpp"
#include "convexa/realize2d.hpp"

namespace convexa::app {

/// Process exit codes shared by all subcommands.
enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kNotConvex = 3,  // also: verify found a different code
  kUnsupported = 4,
  kDimInfeasible = 5,
};

struct InputOptions {
  std::string path;                 // "-" reads stdin
  bool json = false;
  std::optional<unsigned> neurons;
};

struct AnalyzeOptions {
  InputOptions input;
  bool with_realization = false;
  RefineOptions refine;
};

struct RealizeOptions {
  InputOptions input;
  std::string dim = "auto";  // auto | 1 | 2
  std::string svg_path;
  std::string out_path;      // empty: stdout
  RefineOptions refine;
};

struct VerifyOptions {
  std::string realization_path;
  InputOptions code;
};

struct EnumerateOptions {
  unsigned neurons = 3;
  unsigned facets = 3;
  std::string out_dir;
  std::uint64_t seed = 1;
  unsigned samples = 64;
  bool certify = false;
};

NeuralCode load_code(const InputOptions& in);

/// Full analysis document for a code.
nlohmann::json analysis_document(const NeuralCode& code, bool with_realization, const RefineOptions& refine);

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_realize(const RealizeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err);

/// CONVEXA_REFINE_BUDGET, or 32.
int refine_budget_from_env();

}  // namespace convexa::app
