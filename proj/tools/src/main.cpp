#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "plancomp/snapshot.hpp"

using plancomp::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Plan comparison and contrastive narratives"};
  app.require_subcommand(1);

  RunConfig config;
  std::string kb;
  std::string manifest;
  int specificity = 3;
  std::string restrict_class;
  std::vector<std::string> locality;
  std::string labels;
  std::string inference_config;
  double tolerance = 0.0;
  bool rows = false;
  std::vector<std::string> class_pair;

  auto add_kb = [&](CLI::App* sub, const char* help) {
    sub->add_option("--kb", kb, help);
  };
  auto add_manifest = [&](CLI::App* sub) {
    sub->add_option("--manifest", manifest, "Plan manifest (JSON)")->check(CLI::ExistingFile);
  };
  auto add_inference = [&](CLI::App* sub) {
    sub->add_option("--config", inference_config, "Inference config (key=value lines)")
        ->check(CLI::ExistingFile);
    sub->add_option("--equality-tolerance", tolerance, "Values this close compare equal")
        ->check(CLI::NonNegativeNumber);
  };
  auto add_narration = [&](CLI::App* sub) {
    sub->add_option("--restrict-class", restrict_class, "Only narrate objects of this class");
    sub->add_option("--locality", locality, "Time window START END (`_` and `Inf` allowed)")
        ->expected(2);
    sub->add_option("--labels", labels, "Property phrase table (TSV)")->check(CLI::ExistingFile);
    sub->add_option("--class-pair", class_pair, "Classes to pair (default Plan Plan)")
        ->expected(2);
    sub->add_flag("--rows", rows, "Machine-readable rows");
  };

  auto* ingest = app.add_subcommand("ingest", "Parse plans and write a KB snapshot");
  add_manifest(ingest);
  add_kb(ingest, "Snapshot to create or extend");

  auto* compare = app.add_subcommand("compare", "Run the comparison rules for every pair");
  add_kb(compare, "Snapshot to read and update");
  add_manifest(compare);
  add_inference(compare);

  auto* narrate = app.add_subcommand("narrate", "Contrastive narrative per pair");
  add_kb(narrate, "Inferred snapshot");
  add_manifest(narrate);
  add_inference(narrate);
  add_narration(narrate);
  narrate->add_option("--specificity", specificity, "Traversal depth")
      ->check(CLI::IsMember({1, 2, 3}));

  auto* eval = app.add_subcommand("eval", "ACXON vs baseline metrics for levels 1-3");
  add_kb(eval, "Inferred snapshot");
  add_manifest(eval);
  add_inference(eval);
  add_narration(eval);
  eval->add_flag("--keep-going", config.keep_going, "Report cells that fail instead of stopping");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : plancomp::cli::kExitInput;
  }

  try {
    if (!kb.empty()) config.kb_snapshot = kb;
    if (!manifest.empty()) config.manifest = manifest;
    config.specificity = plancomp::specificity_from_int(specificity);
    if (!restrict_class.empty()) config.restrict_class = restrict_class;
    if (!locality.empty()) {
      config.locality = plancomp::Interval{plancomp::parse_time_point(locality[0]),
                                           plancomp::parse_time_point(locality[1])};
      if (!config.locality.valid()) throw std::invalid_argument("invalid --locality interval");
    }
    if (!labels.empty()) config.label_table = labels;
    if (!inference_config.empty()) config.inference_config = inference_config;
    for (auto* sub : {compare, narrate, eval}) {
      if (sub->parsed() && sub->count("--equality-tolerance") > 0)
        config.equality_tolerance = tolerance;
    }
    if (!class_pair.empty()) {
      config.class_a = class_pair[0];
      config.class_b = class_pair[1];
    }
    if (rows) config.output = plancomp::cli::OutputFormat::Rows;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return plancomp::cli::kExitInput;
  }

  if (ingest->parsed()) return plancomp::cli::cmd_ingest(config, std::cout, std::cerr);
  if (compare->parsed()) return plancomp::cli::cmd_compare(config, std::cout, std::cerr);
  if (narrate->parsed()) return plancomp::cli::cmd_narrate(config, std::cout, std::cerr);
  return plancomp::cli::cmd_eval(config, std::cout, std::cerr);
}
