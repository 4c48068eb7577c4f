#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "plancomp/inference.hpp"
#include "plancomp/ingest.hpp"
#include "plancomp/labels.hpp"
#include "plancomp/metrics.hpp"
#include "plancomp/ontology.hpp"
#include "plancomp/snapshot.hpp"

namespace plancomp::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

KnowledgeGraph load_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read snapshot " + path.string());
  KnowledgeGraph kb = make_plan_knowledge_graph();
  read_snapshot(in, kb);
  return kb;
}

void save_snapshot(const KnowledgeGraph& kb, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write snapshot " + path.string());
  write_snapshot(kb, out);
  if (!out) throw InputError("cannot write snapshot " + path.string());
}

InferenceConfig inference_config(const RunConfig& config) {
  InferenceConfig ic;
  if (config.inference_config) {
    std::ifstream in(*config.inference_config);
    if (!in) throw InputError("cannot read config " + config.inference_config->string());
    std::ostringstream buf;
    buf << in.rdbuf();
    ic = InferenceConfig::parse(buf.str());
  }
  if (config.equality_tolerance) {
    if (!(*config.equality_tolerance >= 0.0)) throw InputError("equality tolerance must be >= 0");
    ic.equality_tolerance = *config.equality_tolerance;
  }
  return ic;
}

/// The snapshot when given, else the manifest ingested and inferred in memory.
KnowledgeGraph knowledge_graph(const RunConfig& config) {
  if (config.kb_snapshot) return load_snapshot(*config.kb_snapshot);
  if (!config.manifest) throw InputError("one of --kb or --manifest is required");
  KnowledgeGraph kb = make_plan_knowledge_graph();
  for (const auto& pd : load_manifest_file(*config.manifest)) ingest_plan(kb, pd);
  compare_all_plans(kb, inference_config(config));
  return kb;
}

LabelTable labels(const RunConfig& config) {
  LabelTable table = LabelTable::defaults();
  if (config.label_table) table.merge_file(*config.label_table);
  return table;
}

std::string number(double v) { return DataValue::number(v).to_string(); }

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace

int cmd_ingest(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!config.manifest) throw InputError("--manifest is required");
    if (!config.kb_snapshot) throw InputError("--kb is required");
    const auto plans = load_manifest_file(*config.manifest);
    KnowledgeGraph kb = std::filesystem::exists(*config.kb_snapshot)
                            ? load_snapshot(*config.kb_snapshot)
                            : make_plan_knowledge_graph();
    for (const auto& pd : plans) ingest_plan(kb, pd);
    save_snapshot(kb, *config.kb_snapshot);

    std::size_t width = 4;
    for (const auto& pd : plans) width = std::max(width, pd.name.size());
    out << fmt::format("{:<{}} tasks cost makespan\n", "plan", width);
    for (const auto& pd : plans) {
      out << fmt::format("{:<{}} {} {} {}\n", pd.name, width, pd.actions.size(), number(pd.cost),
                         number(pd.makespan));
    }
    return kExitOk;
  });
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!config.kb_snapshot && !config.manifest)
      throw InputError("one of --kb or --manifest is required");
    KnowledgeGraph kb = config.kb_snapshot ? load_snapshot(*config.kb_snapshot)
                                           : KnowledgeGraph(make_plan_knowledge_graph());
    if (!config.kb_snapshot) {
      for (const auto& pd : load_manifest_file(*config.manifest)) ingest_plan(kb, pd);
    }
    const auto report = compare_all_plans(kb, inference_config(config));
    if (config.kb_snapshot) save_snapshot(kb, *config.kb_snapshot);

    if (report.pairs.empty() && report.errors.empty()) {
      out << "no pairs\n";
      return kExitOk;
    }
    for (const auto& p : report.pairs) {
      out << fmt::format("{} | {}: {}\n", p.plan_a, p.plan_b, to_string(p.verdict));
      for (const auto& [a, b] : {std::pair{p.plan_a, p.plan_b}, std::pair{p.plan_b, p.plan_a}}) {
        for (const auto& r : plan_relations(kb, a, b)) out << fmt::format("  {} {} {}\n", a, r, b);
      }
      for (const auto& w : p.warnings) out << "  warning: " << w << '\n';
    }
    for (const auto& e : report.errors)
      err << fmt::format("error: {} | {}: {}\n", e.plan_a, e.plan_b, e.message);
    return report.errors.empty() ? kExitOk : kExitInput;
  });
}

int cmd_narrate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const KnowledgeGraph kb = knowledge_graph(config);
    const auto result = acxon(kb, {{config.class_a, config.class_b}}, config.locality,
                              config.specificity, config.restrict_class, labels(config));
    if (config.output == OutputFormat::Rows) out << "a,b,level,retrieved,divergent,text\n";
    for (const auto& n : result.narratives) {
      if (config.output == OutputFormat::Rows) {
        std::string quoted;
        for (char c : n.text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        out << fmt::format("{},{},{},{},{},\"{}\"\n", n.pair.a.entity, n.pair.b.entity,
                           to_int(n.specificity), n.retrieved_count, n.divergent_tuples.size(),
                           quoted);
      } else {
        out << fmt::format("# {} | {}\n{}\n", n.pair.a.entity, n.pair.b.entity, n.text);
      }
    }
    for (const auto& e : result.errors)
      err << fmt::format("error: {} | {}: {}\n", e.pair.a.entity, e.pair.b.entity, e.message);
    return result.errors.empty() ? kExitOk : kExitInput;
  });
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const KnowledgeGraph kb = knowledge_graph(config);
    const auto report =
        compare_report(kb, {{config.class_a, config.class_b}}, config.locality,
                       {Specificity::Level1, Specificity::Level2, Specificity::Level3},
                       config.restrict_class, labels(config));
    for (const auto& e : report.errors)
      err << fmt::format("error: {} level {}: {}\n", e.algorithm, to_int(e.level), e.message);
    if (!report.errors.empty() && !config.keep_going) return kExitInput;
    out << (config.output == OutputFormat::Rows ? format_report_rows(report)
                                                : format_report_table(report));
    return kExitOk;
  });
}

}  // namespace plancomp::cli
