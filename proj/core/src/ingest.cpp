#include "plancomp/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include <fmt/format.h>
#include <json.hpp>

#include "plancomp/ontology.hpp"

namespace plancomp {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_space(s.front()) || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> to_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

TimedAction parse_line(std::string_view line, std::size_t number) {
  auto colon = line.find(':');
  if (colon == std::string_view::npos) throw ParseError(number, "missing ':' after start time");
  auto start = to_number(line.substr(0, colon));
  if (!start || *start < 0.0) throw ParseError(number, "bad start time");

  auto rest = trim(line.substr(colon + 1));
  if (rest.empty() || rest.front() != '(') throw ParseError(number, "expected '(' before action");
  auto close = rest.find(')');
  if (close == std::string_view::npos) throw ParseError(number, "missing ')'");

  std::istringstream tokens{std::string(rest.substr(1, close - 1))};
  std::string label;
  for (std::string tok; tokens >> tok;) {
    if (!label.empty()) label += ' ';
    label += tok;
  }
  if (label.empty()) throw ParseError(number, "empty action");

  rest = trim(rest.substr(close + 1));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    throw ParseError(number, "expected '[duration]'");
  auto duration = to_number(rest.substr(1, rest.size() - 2));
  if (!duration || *duration <= 0.0) throw ParseError(number, "duration must be > 0");
  return TimedAction{*start, std::move(label), *duration};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot read {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<double> optional_number(const nlohmann::json& plan, const char* key,
                                      const std::string& path) {
  auto it = plan.find(key);
  if (it == plan.end()) return std::nullopt;
  if (!it->is_number()) throw ManifestError(path + "." + key, "expected a number");
  double v = it->get<double>();
  if (!std::isfinite(v) || v < 0.0) throw ManifestError(path + "." + key, "must be >= 0");
  return v;
}

}  // namespace

std::vector<std::string> PlanDescription::task_labels() const {
  std::vector<std::string> out;
  out.reserve(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i)
    out.push_back(fmt::format("T{}-{}", i, actions[i].label));
  return out;
}

PlanDescription parse_plan_trace(const std::string& text, const std::string& plan_name) {
  PlanDescription pd;
  pd.name = plan_name;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto line = trim(raw);
    if (line.empty() || line.front() == ';') continue;
    pd.actions.push_back(parse_line(line, number));
  }
  if (pd.actions.empty())
    throw EmptyPlanError(fmt::format("trace for '{}' has no actions", plan_name));

  std::stable_sort(pd.actions.begin(), pd.actions.end(),
                   [](const TimedAction& a, const TimedAction& b) { return a.start < b.start; });
  for (const auto& a : pd.actions) {
    pd.cost += a.duration;
    pd.makespan = std::max(pd.makespan, a.start + a.duration);
  }
  return pd;
}

std::string render_plan_trace(const PlanDescription& pd) {
  std::string out;
  for (const auto& a : pd.actions) out += fmt::format("{}: ({}) [{}]\n", a.start, a.label, a.duration);
  return out;
}

std::vector<PlanDescription> load_manifest(const std::string& text,
                                           const std::filesystem::path& base_dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ManifestError("$", e.what());
  }
  if (!doc.is_object()) throw ManifestError("$", "expected an object");
  auto plans = doc.find("plans");
  if (plans == doc.end() || !plans->is_array()) throw ManifestError("plans", "expected an array");

  std::vector<PlanDescription> out;
  for (std::size_t i = 0; i < plans->size(); ++i) {
    const auto& plan = (*plans)[i];
    const std::string path = fmt::format("plans[{}]", i);
    if (!plan.is_object()) throw ManifestError(path, "expected an object");

    auto name = plan.find("name");
    if (name == plan.end() || !name->is_string() || name->get<std::string>().empty())
      throw ManifestError(path + ".name", "expected a non-empty string");
    auto trace = plan.find("trace");
    if (trace == plan.end() || !trace->is_string())
      throw ManifestError(path + ".trace", "expected a path string");

    std::filesystem::path trace_path(trace->get<std::string>());
    if (trace_path.is_relative()) trace_path = base_dir / trace_path;
    std::string trace_text;
    try {
      trace_text = read_file(trace_path);
    } catch (const std::runtime_error& e) {
      throw ManifestError(path + ".trace", e.what());
    }

    PlanDescription pd;
    try {
      pd = parse_plan_trace(trace_text, name->get<std::string>());
    } catch (const Error& e) {
      throw ManifestError(path + ".trace", fmt::format("{}: {}", trace_path.string(), e.what()));
    }
    if (auto cost = optional_number(plan, "cost", path)) pd.cost = *cost;
    if (auto makespan = optional_number(plan, "makespan", path)) pd.makespan = *makespan;
    out.push_back(std::move(pd));
  }
  return out;
}

std::vector<PlanDescription> load_manifest_file(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw ManifestError("$", e.what());
  }
  return load_manifest(text, path.parent_path());
}

void ingest_plan(KnowledgeGraph& kb, const PlanDescription& pd) {
  assert_plan(kb, pd.name, pd.task_labels(), pd.cost, pd.makespan, Interval::universal());
}

}  // namespace plancomp
