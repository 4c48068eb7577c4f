#pragma once

// Clause grouping and surface realization shared by the contrastive
// narrator and the baseline.

#include <string>
#include <vector>

#include "plancomp/kb.hpp"
#include "plancomp/labels.hpp"

namespace plancomp::detail {

struct Clause {
  std::string subject;
  std::vector<std::string> properties;  // predicate-grouped
  std::vector<Term> objects;            // object-grouped
  Interval interval;
  Sign sign = Sign::Positive;
  std::vector<std::string> subordinates;  // rendered ", which ..." tails
};

/// Object grouping, then predicate grouping, keeping first-appearance order.
std::vector<Clause> group_clauses(const std::vector<TimedTuple>& tuples);

/// `x' quoting for entities and data values.
std::string quote(const Term& t);

std::string verb_phrase(const std::string& property, Sign sign, const LabelTable& labels);

/// " from X to Y" when `interval` differs from every reference interval and
/// is not (_, Inf); empty otherwise.
std::string interval_suffix(const Interval& interval, const std::vector<Interval>& reference);

/// Subject, predicates, objects, interval, then subordinates.
std::string render_clause(const Clause& c, const std::vector<Interval>& reference,
                          const LabelTable& labels);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace plancomp::detail
