#pragma once

// Staged commands behind the `plancomp` executable. Each returns a process
// exit code and writes only to the given streams.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "plancomp/acxon.hpp"
#include "plancomp/kb.hpp"

namespace plancomp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

enum class OutputFormat { Text, Rows };

struct RunConfig {
  std::optional<std::filesystem::path> kb_snapshot;
  std::optional<std::filesystem::path> manifest;
  Specificity specificity = Specificity::Level3;
  std::optional<std::string> restrict_class;
  Interval locality = Interval::universal();
  OutputFormat output = OutputFormat::Text;
  std::optional<std::filesystem::path> label_table;
  std::optional<std::filesystem::path> inference_config;
  std::optional<double> equality_tolerance;
  bool keep_going = false;
  std::string class_a = "Plan";
  std::string class_b = "Plan";
};

/// Reads the manifest, asserts every plan into the snapshot at kb_snapshot
/// (loaded first when it exists), writes it back and prints one
/// `<plan> <tasks> <cost> <makespan>` row per plan.
int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Runs every comparison rule for every pair of plans, writes the snapshot
/// back when one was given, and prints the plan-to-plan relations per pair.
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);

/// One narrative per instantiated pair.
int cmd_narrate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// ACXON-vs-baseline metrics for levels 1 to 3.
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace plancomp::cli
