#include "plancomp/inference.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

namespace plancomp {

namespace {

using namespace vocab;

std::string s(std::string_view v) { return std::string(v); }

void put(KnowledgeGraph& kb, const std::string& subject, std::string_view property,
         const std::string& object) {
  kb.assert_tuple(TimedTuple{subject, s(property), Term(object), Interval::universal(),
                             Sign::Positive});
}

double numeric_value(const KnowledgeGraph& kb, const std::string& quality) {
  auto values = kb.query(TriplePattern{.subject = quality, .property = s(kHasDataValue),
                                       .sign = Sign::Positive});
  if (values.empty())
    throw MissingQualityError(fmt::format("quality '{}' has no value", quality));
  const Term& o = values.front().object;
  if (o.is_entity() || !o.value().is_number())
    throw NonNumericValueError(fmt::format("quality '{}' has a non-numeric value", quality));
  return o.value().as_number();
}

std::string require_quality(const KnowledgeGraph& kb, const std::string& plan, QualityKind kind) {
  auto q = find_quality(kb, plan, kind);
  if (!q) throw MissingQualityError(fmt::format("plan '{}' has no {}", plan, info(kind).name));
  return *q;
}

std::string_view trim(std::string_view v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  return v;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Better:
      return "better";
    case Verdict::Worse:
      return "worse";
    case Verdict::Equivalent:
      return "equivalent";
    case Verdict::Undecided:
      break;
  }
  return "undecided";
}

InferenceConfig InferenceConfig::parse(const std::string& text) {
  InferenceConfig config;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(number, "expected key=value");
    auto key = trim(line.substr(0, eq));
    auto value = std::string(trim(line.substr(eq + 1)));

    if (key == "equality_tolerance") {
      std::size_t used = 0;
      double tol = 0.0;
      try {
        tol = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || !std::isfinite(tol) || tol < 0.0)
        throw ParseError(number, "equality_tolerance must be a number >= 0");
      config.equality_tolerance = tol;
    } else if (key.starts_with("polarity.")) {
      auto kind = quality_kind_from_name(key.substr(9));
      if (!kind) throw ParseError(number, fmt::format("unknown quality kind in '{}'", key));
      Polarity p;
      if (value == "lower" || value == "lower_is_better") {
        p = Polarity::LowerIsBetter;
      } else if (value == "higher" || value == "higher_is_better") {
        p = Polarity::HigherIsBetter;
      } else {
        throw ParseError(number, fmt::format("polarity must be lower or higher, got '{}'", value));
      }
      config.polarity[static_cast<std::size_t>(*kind)] = p;
    } else {
      throw ParseError(number, fmt::format("unknown key '{}'", key));
    }
  }
  return config;
}

QualityOrder compare_quality_pair(KnowledgeGraph& kb, const std::string& plan_a,
                                  const std::string& plan_b, QualityKind kind, Polarity polarity,
                                  double equality_tolerance) {
  if (!is_plan(kb, plan_a)) throw UnknownPlanError(fmt::format("unknown plan '{}'", plan_a));
  if (!is_plan(kb, plan_b)) throw UnknownPlanError(fmt::format("unknown plan '{}'", plan_b));
  const std::string qa = require_quality(kb, plan_a, kind);
  const std::string qb = require_quality(kb, plan_b, kind);
  const double va = numeric_value(kb, qa);
  const double vb = numeric_value(kb, qb);
  const auto& ki = info(kind);

  if (std::fabs(va - vb) <= equality_tolerance) {
    put(kb, qa, kHasEquivalentQualityValueThan, qb);
    put(kb, qb, kHasEquivalentQualityValueThan, qa);
    put(kb, plan_a, ki.same_relation, plan_b);
    put(kb, plan_b, ki.same_relation, plan_a);
    return QualityOrder::Equal;
  }

  const bool a_better = polarity == Polarity::LowerIsBetter ? va < vb : va > vb;
  if (a_better) {
    put(kb, qa, kHasBetterQualityValueThan, qb);
    put(kb, qb, kHasWorseQualityValueThan, qa);
    put(kb, plan_a, ki.better_relation, plan_b);
    put(kb, plan_b, ki.worse_relation, plan_a);
    return QualityOrder::ABetter;
  }
  put(kb, qa, kHasWorseQualityValueThan, qb);
  put(kb, qb, kHasBetterQualityValueThan, qa);
  put(kb, plan_a, ki.worse_relation, plan_b);
  put(kb, plan_b, ki.better_relation, plan_a);
  return QualityOrder::AWorse;
}

DominanceOutcome infer_plan_dominance(KnowledgeGraph& kb, const std::string& plan_a,
                                      const std::string& plan_b) {
  if (!is_plan(kb, plan_a)) throw UnknownPlanError(fmt::format("unknown plan '{}'", plan_a));
  if (!is_plan(kb, plan_b)) throw UnknownPlanError(fmt::format("unknown plan '{}'", plan_b));

  DominanceOutcome out;
  std::size_t better = 0;
  std::size_t worse = 0;
  std::size_t equal = 0;
  std::size_t compared = 0;
  for (QualityKind kind : kAllQualityKinds) {
    auto qa = find_quality(kb, plan_a, kind);
    auto qb = find_quality(kb, plan_b, kind);
    if (qa.has_value() != qb.has_value()) {
      out.warnings.push_back(fmt::format("{} is only defined for '{}'; ignored", info(kind).name,
                                         qa ? plan_a : plan_b));
      continue;
    }
    if (!qa) continue;

    bool b = false;
    bool w = false;
    bool e = false;
    TriplePattern p{.subject = *qa, .object = Term(*qb), .sign = Sign::Positive};
    for (const auto& t : query_entailed(kb, p)) {
      b = b || t.property == kHasBetterQualityValueThan;
      w = w || t.property == kHasWorseQualityValueThan;
      e = e || t.property == kHasEquivalentQualityValueThan;
    }
    if (!b && !w && !e) continue;
    ++compared;
    if (b && !w && !e) {
      ++better;
    } else if (w && !b && !e) {
      ++worse;
    } else if (e && !b && !w) {
      ++equal;
    }
  }
  if (compared == 0)
    throw NoComparedQualitiesError(
        fmt::format("no compared qualities between '{}' and '{}'", plan_a, plan_b));

  if (better == compared) {
    put(kb, plan_a, kIsBetterPlanThan, plan_b);
    put(kb, plan_b, kIsWorsePlanThan, plan_a);
    out.verdict = Verdict::Better;
  } else if (worse == compared) {
    put(kb, plan_a, kIsWorsePlanThan, plan_b);
    put(kb, plan_b, kIsBetterPlanThan, plan_a);
    out.verdict = Verdict::Worse;
  } else if (equal == compared) {
    put(kb, plan_a, kIsEquivalentPlanTo, plan_b);
    put(kb, plan_b, kIsEquivalentPlanTo, plan_a);
    out.verdict = Verdict::Equivalent;
  }
  return out;
}

ComparisonReport compare_all_plans(KnowledgeGraph& kb, const InferenceConfig& config) {
  ComparisonReport report;
  const auto plans = plan_names(kb);
  for (std::size_t i = 0; i < plans.size(); ++i) {
    for (std::size_t j = i + 1; j < plans.size(); ++j) {
      const auto& a = plans[i];
      const auto& b = plans[j];
      try {
        for (QualityKind kind : kAllQualityKinds) {
          if (find_quality(kb, a, kind) && find_quality(kb, b, kind))
            compare_quality_pair(kb, a, b, kind, config.polarity_of(kind), config.equality_tolerance);
        }
        auto outcome = infer_plan_dominance(kb, a, b);
        report.pairs.push_back(PairResult{a, b, outcome.verdict, std::move(outcome.warnings)});
      } catch (const Error& e) {
        report.errors.push_back(PairError{a, b, e.what()});
      }
    }
  }
  return report;
}

}  // namespace plancomp
