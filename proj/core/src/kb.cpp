#include "plancomp/kb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace plancomp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

double lower_bound_of(const TimePoint& p) {
  return p.kind() == TimePoint::Kind::Finite ? p.seconds() : kNegInf;
}

double upper_bound_of(const TimePoint& p) {
  return p.kind() == TimePoint::Kind::Finite ? p.seconds() : kPosInf;
}

void hash_combine(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::size_t hash_point(const TimePoint& p) {
  std::size_t h = std::hash<int>{}(static_cast<int>(p.kind()));
  if (p.is_finite()) hash_combine(h, std::hash<double>{}(p.seconds()));
  return h;
}

void validate_label(const std::string& label, const char* slot) {
  if (label.empty()) throw InvalidTupleError(fmt::format("empty {} name", slot));
  if (label.front() == '"')
    throw InvalidTupleError(fmt::format("{} name may not start with a quote: {}", slot, label));
  for (char c : label) {
    if (c == '\t' || c == '\n' || c == '\r')
      throw InvalidTupleError(fmt::format("{} name contains a control character", slot));
  }
}

bool contains_name(const std::vector<std::string>& v, const std::string& name) {
  return std::find(v.begin(), v.end(), name) != v.end();
}

// Reflexive-transitive reachability over a parent map.
bool reaches(const std::unordered_map<std::string, std::vector<std::string>>& parents,
             const std::string& from, const std::string& to) {
  if (from == to) return true;
  std::vector<std::string> stack{from};
  std::unordered_set<std::string> seen{from};
  while (!stack.empty()) {
    std::string cur = std::move(stack.back());
    stack.pop_back();
    auto it = parents.find(cur);
    if (it == parents.end()) continue;
    for (const auto& next : it->second) {
      if (next == to) return true;
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

}  // namespace

TimePoint TimePoint::at(double seconds) {
  if (!std::isfinite(seconds) || seconds < 0.0)
    throw InvalidTupleError(fmt::format("time point must be finite and >= 0, got {}", seconds));
  return TimePoint(Kind::Finite, seconds);
}

Interval Interval::between(double start, double end) {
  Interval i{TimePoint::at(start), TimePoint::at(end)};
  if (!i.valid()) throw InvalidTupleError(fmt::format("interval start {} after end {}", start, end));
  return i;
}

bool Interval::valid() const noexcept {
  if (start.kind() == TimePoint::Kind::Infinity) return false;
  if (end.kind() == TimePoint::Kind::Undetermined) return false;
  if (start.is_finite() && end.is_finite()) return start.seconds() <= end.seconds();
  return true;
}

bool intervals_intersect(const Interval& a, const Interval& b) noexcept {
  return lower_bound_of(a.start) <= upper_bound_of(b.end) &&
         lower_bound_of(b.start) <= upper_bound_of(a.end);
}

DataValue DataValue::number(double value) {
  if (!std::isfinite(value)) throw InvalidTupleError("data value must be finite");
  return DataValue(value);
}

std::string DataValue::to_string() const {
  if (is_number()) return fmt::format("{}", as_number());
  return as_text();
}

std::string Term::to_string() const { return is_entity() ? name() : value().to_string(); }

std::size_t TimedTupleHash::operator()(const TimedTuple& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.subject);
  hash_combine(h, std::hash<std::string>{}(t.property));
  if (t.object.is_entity()) {
    hash_combine(h, std::hash<std::string>{}(t.object.name()));
  } else if (t.object.value().is_number()) {
    hash_combine(h, std::hash<double>{}(t.object.value().as_number()));
  } else {
    hash_combine(h, std::hash<std::string>{}(t.object.value().as_text()) ^ 0x5bd1e995ULL);
  }
  hash_combine(h, hash_point(t.interval.start));
  hash_combine(h, hash_point(t.interval.end));
  hash_combine(h, t.sign == Sign::Positive ? 1u : 2u);
  return h;
}

void PropertyRegistry::add_inverse(const std::string& p, const std::string& q) {
  auto check = [this](const std::string& a, const std::string& b) {
    auto it = inverse_.find(a);
    if (it != inverse_.end() && it->second != b)
      throw std::invalid_argument(
          fmt::format("{} already has inverse {}, cannot pair with {}", a, it->second, b));
  };
  check(p, q);
  check(q, p);
  inverse_[p] = q;
  inverse_[q] = p;
}

void PropertyRegistry::add_subproperty(const std::string& sub, const std::string& super) {
  auto& v = supers_[sub];
  if (!contains_name(v, super)) v.push_back(super);
}

void PropertyRegistry::add_disjoint(const std::string& p, const std::string& q) {
  if (!contains_name(disjoint_[p], q)) disjoint_[p].push_back(q);
  if (!contains_name(disjoint_[q], p)) disjoint_[q].push_back(p);
}

std::optional<std::string> PropertyRegistry::inverse(const std::string& p) const {
  auto it = inverse_.find(p);
  if (it == inverse_.end()) return std::nullopt;
  return it->second;
}

bool PropertyRegistry::is_symmetric(const std::string& p) const {
  auto it = inverse_.find(p);
  return it != inverse_.end() && it->second == p;
}

bool PropertyRegistry::is_subproperty(const std::string& sub, const std::string& super) const {
  return reaches(supers_, sub, super);
}

std::vector<std::string> PropertyRegistry::disjoint_with(const std::string& p) const {
  auto it = disjoint_.find(p);
  return it == disjoint_.end() ? std::vector<std::string>{} : it->second;
}

void ClassHierarchy::add_subclass(const std::string& sub, const std::string& super) {
  auto& v = supers_[sub];
  if (!contains_name(v, super)) v.push_back(super);
}

bool ClassHierarchy::is_subclass(const std::string& sub, const std::string& super) const {
  return reaches(supers_, sub, super);
}

bool TriplePattern::matches(const TimedTuple& t) const {
  if (subject && *subject != t.subject) return false;
  if (property && *property != t.property) return false;
  if (object && !(*object == t.object)) return false;
  if (sign && *sign != t.sign) return false;
  return true;
}

bool KnowledgeGraph::assert_tuple(const TimedTuple& t) {
  validate_label(t.subject, "subject");
  validate_label(t.property, "property");
  if (!t.interval.valid()) throw InvalidTupleError("invalid interval for " + t.subject);

  const bool is_type = t.property == kType;
  const bool is_data = registry_.is_data_property(t.property);
  if (t.object.is_entity()) {
    validate_label(t.object.name(), "object");
    if (is_data)
      throw NamespaceError(fmt::format("data property {} needs a data value object", t.property));
  } else if (!is_data) {
    throw NamespaceError(fmt::format("data value object used with non-data property {}", t.property));
  } else if (!t.object.value().is_number()) {
    for (char c : t.object.value().as_text()) {
      if (c == '\t' || c == '\n' || c == '\r')
        throw InvalidTupleError("text data value contains a control character");
    }
  }

  if (index_.contains(t)) return false;

  // Namespace rules: subject in N_I, property in N_P, object in N_C for
  // type tuples and N_I otherwise.
  auto expect = [this](const std::string& name, Namespace ns) {
    auto it = names_.find(name);
    if (it != names_.end() && it->second != ns)
      throw NamespaceError(fmt::format("'{}' already used in another namespace", name));
  };
  expect(t.subject, Namespace::Individual);
  expect(t.property, Namespace::Property);
  if (t.object.is_entity())
    expect(t.object.name(), is_type ? Namespace::Class : Namespace::Individual);
  if (t.object.is_entity() && t.object.name() == t.subject && is_type)
    throw NamespaceError(fmt::format("'{}' cannot be its own class", t.subject));
  if (t.subject == t.property || (t.object.is_entity() && t.object.name() == t.property))
    throw NamespaceError(fmt::format("'{}' used as both property and entity", t.property));

  TimedTuple flipped = t;
  flipped.sign = t.sign == Sign::Positive ? Sign::Negative : Sign::Positive;
  if (index_.contains(flipped))
    throw ContradictionError(fmt::format("<{}, {}, {}> already asserted with the opposite sign",
                                         t.subject, t.property, t.object.to_string()));
  if (t.sign == Sign::Positive) check_disjointness(t);

  names_.emplace(t.subject, Namespace::Individual);
  names_.emplace(t.property, Namespace::Property);
  if (t.object.is_entity())
    names_.emplace(t.object.name(), is_type ? Namespace::Class : Namespace::Individual);

  const std::size_t pos = tuples_.size();
  tuples_.push_back(t);
  index_.emplace(t, pos);
  by_subject_[t.subject].push_back(pos);
  if (t.object.is_entity()) by_object_[t.object.name()].push_back(pos);
  return true;
}

void KnowledgeGraph::check_disjointness(const TimedTuple& t) const {
  if (!t.object.is_entity()) return;
  for (const auto& other : registry_.disjoint_with(t.property)) {
    auto clash = [&](const std::string& s, const std::string& p, const std::string& o) {
      auto it = by_subject_.find(s);
      if (it == by_subject_.end()) return false;
      return std::any_of(it->second.begin(), it->second.end(), [&](std::size_t i) {
        const auto& u = tuples_[i];
        return u.property == p && u.object_is(o) && u.sign == Sign::Positive &&
               intervals_intersect(u.interval, t.interval);
      });
    };
    bool hit = clash(t.subject, other, t.object.name());
    if (!hit) {
      if (auto inv = registry_.inverse(other)) hit = clash(t.object.name(), *inv, t.subject);
    }
    if (hit)
      throw ContradictionError(fmt::format("{} is disjoint with {} asserted between {} and {}",
                                           t.property, other, t.subject, t.object.name()));
  }
}

std::vector<TimedTuple> KnowledgeGraph::query(const TriplePattern& pattern,
                                              const std::optional<Interval>& locality) const {
  std::vector<TimedTuple> out;
  auto consider = [&](const TimedTuple& t) {
    if (!pattern.matches(t)) return;
    if (locality && !intervals_intersect(t.interval, *locality)) return;
    out.push_back(t);
  };
  const std::vector<std::size_t>* candidates = nullptr;
  if (pattern.subject) {
    auto it = by_subject_.find(*pattern.subject);
    if (it == by_subject_.end()) return out;
    candidates = &it->second;
  } else if (pattern.object && pattern.object->is_entity()) {
    auto it = by_object_.find(pattern.object->name());
    if (it == by_object_.end()) return out;
    candidates = &it->second;
  }
  if (candidates) {
    for (std::size_t i : *candidates) consider(tuples_[i]);
  } else {
    for (const auto& t : tuples_) consider(t);
  }
  return out;
}

std::vector<std::size_t> KnowledgeGraph::touching(const std::string& name) const {
  std::vector<std::size_t> out;
  if (auto it = by_subject_.find(name); it != by_subject_.end()) out = it->second;
  if (auto it = by_object_.find(name); it != by_object_.end())
    out.insert(out.end(), it->second.begin(), it->second.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Namespace> KnowledgeGraph::namespace_of(const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.tuples_.begin(), a.tuples_.end(),
                     [&](const TimedTuple& t) { return b.contains(t); });
}

bool can_invert(const KnowledgeGraph& kb, const TimedTuple& t) {
  return t.object.is_entity() && kb.registry().inverse(t.property).has_value();
}

TimedTuple invert_tuple(const KnowledgeGraph& kb, const TimedTuple& t) {
  if (!t.object.is_entity())
    throw NoInverseError(fmt::format("cannot invert <{}, {}, ...>: object is a data value",
                                     t.subject, t.property));
  auto inv = kb.registry().inverse(t.property);
  if (!inv) throw NoInverseError(fmt::format("property {} has no registered inverse", t.property));
  return TimedTuple{t.object.name(), *inv, Term(t.subject), t.interval, t.sign};
}

std::vector<InstanceInterval> instances_of(const KnowledgeGraph& kb, const std::string& cls,
                                           const Interval& locality) {
  std::vector<InstanceInterval> out;
  TriplePattern pattern{.property = std::string(kType), .sign = Sign::Positive};
  for (const auto& t : kb.query(pattern, locality)) {
    if (!kb.classes().is_subclass(t.object.name(), cls)) continue;
    InstanceInterval item{t.subject, t.interval};
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(std::move(item));
  }
  return out;
}

bool is_instance_of(const KnowledgeGraph& kb, const std::string& entity, const std::string& cls) {
  TriplePattern pattern{.subject = entity, .property = std::string(kType), .sign = Sign::Positive};
  for (const auto& t : kb.query(pattern)) {
    if (kb.classes().is_subclass(t.object.name(), cls)) return true;
  }
  return false;
}

std::vector<TimedTuple> query_entailed(const KnowledgeGraph& kb, const TriplePattern& pattern,
                                       const std::optional<Interval>& locality) {
  std::vector<TimedTuple> out;
  std::unordered_set<TimedTuple, TimedTupleHash> seen;
  auto accept = [&](TimedTuple t) {
    if (pattern.property) {
      if (!kb.registry().is_subproperty(t.property, *pattern.property)) return;
    }
    TriplePattern rest = pattern;
    rest.property.reset();
    if (!rest.matches(t)) return;
    if (locality && !intervals_intersect(t.interval, *locality)) return;
    if (seen.insert(t).second) out.push_back(std::move(t));
  };

  std::vector<std::size_t> candidates;
  if (pattern.subject) {
    candidates = kb.touching(*pattern.subject);
  } else if (pattern.object && pattern.object->is_entity()) {
    candidates = kb.touching(pattern.object->name());
  } else {
    candidates.resize(kb.size());
    for (std::size_t i = 0; i < kb.size(); ++i) candidates[i] = i;
  }
  const auto all = kb.tuples();
  for (std::size_t i : candidates) {
    const TimedTuple& t = all[i];
    accept(t);
    if (can_invert(kb, t)) accept(invert_tuple(kb, t));
  }
  return out;
}

}  // namespace plancomp
