#pragma once

// Time-indexed, signed triple store.
//
// A KnowledgeGraph holds TimedTuples <s, p, o, [t_i, t_f], sign> in
// insertion order.  Names live in three disjoint namespaces (individuals,
// classes, properties); the namespace of a name is fixed by its first use.
// Absence of a tuple means "unknown", never "false": falsity is only ever
// an explicit Negative tuple.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <variant>
#include <vector>

#include "plancomp/errors.hpp"

namespace plancomp {

/// The rdf:type property, abbreviated.
inline constexpr std::string_view kType = "type";

class TimePoint {
 public:
  enum class Kind { Finite, Undetermined, Infinity };

  /// Throws InvalidTupleError for negative or non-finite seconds.
  static TimePoint at(double seconds);
  static TimePoint undetermined() noexcept { return TimePoint(Kind::Undetermined, 0.0); }
  static TimePoint infinity() noexcept { return TimePoint(Kind::Infinity, 0.0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// Seconds for a Finite point; 0 otherwise.
  double seconds() const noexcept { return seconds_; }

  friend bool operator==(const TimePoint&, const TimePoint&) = default;

 private:
  TimePoint(Kind kind, double seconds) : kind_(kind), seconds_(seconds) {}

  Kind kind_;
  double seconds_;
};

/// Closed time interval. Undetermined is only legal as a start and
/// Infinity only as an end.
struct Interval {
  TimePoint start = TimePoint::undetermined();
  TimePoint end = TimePoint::infinity();

  /// (_, Inf): held since an undetermined instant, still holding.
  static Interval universal() noexcept { return {}; }
  static Interval between(double start, double end);

  bool valid() const noexcept;
  bool is_universal() const noexcept { return *this == universal(); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Overlap test treating an undetermined start as -inf and an infinite end
/// as +inf. Touching endpoints intersect.
bool intervals_intersect(const Interval& a, const Interval& b) noexcept;

enum class Sign { Positive, Negative };

/// A quale: the literal value carried by a data property.
class DataValue {
 public:
  /// Throws InvalidTupleError for NaN or infinite payloads.
  static DataValue number(double value);
  static DataValue text(std::string value) { return DataValue(std::move(value)); }

  bool is_number() const noexcept { return std::holds_alternative<double>(value_); }
  double as_number() const { return std::get<double>(value_); }
  const std::string& as_text() const { return std::get<std::string>(value_); }

  /// Numbers use the shortest round-trip decimal form ("59", "27.5").
  std::string to_string() const;

  friend bool operator==(const DataValue&, const DataValue&) = default;

 private:
  explicit DataValue(double v) : value_(v) {}
  explicit DataValue(std::string v) : value_(std::move(v)) {}

  std::variant<double, std::string> value_;
};

/// Object slot of a tuple: a named entity (individual or class) or a data value.
class Term {
 public:
  Term(std::string name) : value_(std::move(name)) {}  // NOLINT(google-explicit-constructor)
  Term(const char* name) : value_(std::string(name)) {}  // NOLINT(google-explicit-constructor)
  Term(DataValue value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  bool is_entity() const noexcept { return std::holds_alternative<std::string>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }
  const DataValue& value() const { return std::get<DataValue>(value_); }

  /// Entity name, or the data value's text form.
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  std::variant<std::string, DataValue> value_;
};

struct TimedTuple {
  std::string subject;
  std::string property;
  Term object;
  Interval interval = Interval::universal();
  Sign sign = Sign::Positive;

  bool object_is(std::string_view name) const {
    return object.is_entity() && object.name() == name;
  }

  friend bool operator==(const TimedTuple&, const TimedTuple&) = default;
};

struct TimedTupleHash {
  std::size_t operator()(const TimedTuple& t) const noexcept;
};

enum class Namespace { Individual, Class, Property };

/// Property metadata: inverses, symmetry, data properties, a
/// sub-property hierarchy, and pairwise disjointness.
class PropertyRegistry {
 public:
  /// Registers p and q as mutual inverses. Throws std::invalid_argument if
  /// either already has a different inverse.
  void add_inverse(const std::string& p, const std::string& q);
  /// A symmetric property is its own inverse.
  void add_symmetric(const std::string& p) { add_inverse(p, p); }
  void add_data_property(const std::string& p) { data_properties_.insert(p); }
  void add_subproperty(const std::string& sub, const std::string& super);
  void add_disjoint(const std::string& p, const std::string& q);

  std::optional<std::string> inverse(const std::string& p) const;
  bool is_symmetric(const std::string& p) const;
  bool is_data_property(const std::string& p) const { return data_properties_.contains(p); }
  /// Reflexive-transitive.
  bool is_subproperty(const std::string& sub, const std::string& super) const;
  std::vector<std::string> disjoint_with(const std::string& p) const;

 private:
  std::unordered_map<std::string, std::string> inverse_;
  std::unordered_set<std::string> data_properties_;
  std::unordered_map<std::string, std::vector<std::string>> supers_;
  std::unordered_map<std::string, std::vector<std::string>> disjoint_;
};

class ClassHierarchy {
 public:
  void add_subclass(const std::string& sub, const std::string& super);
  /// Reflexive-transitive.
  bool is_subclass(const std::string& sub, const std::string& super) const;

 private:
  std::unordered_map<std::string, std::vector<std::string>> supers_;
};

/// Per-slot pattern; an empty optional is a wildcard.
struct TriplePattern {
  std::optional<std::string> subject = std::nullopt;
  std::optional<std::string> property = std::nullopt;
  std::optional<Term> object = std::nullopt;
  std::optional<Sign> sign = std::nullopt;

  bool matches(const TimedTuple& t) const;
};

/// Single-writer, multi-reader: const member functions may run
/// concurrently; assert_tuple needs exclusive access.
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;
  KnowledgeGraph(PropertyRegistry registry, ClassHierarchy classes)
      : registry_(std::move(registry)), classes_(std::move(classes)) {}

  /// Inserts t. Returns false when t was already present.
  /// Throws InvalidTupleError, NamespaceError or ContradictionError.
  bool assert_tuple(const TimedTuple& t);

  bool contains(const TimedTuple& t) const { return index_.contains(t); }
  std::size_t size() const noexcept { return tuples_.size(); }
  bool empty() const noexcept { return tuples_.empty(); }
  std::span<const TimedTuple> tuples() const noexcept { return tuples_; }

  /// Stored tuples matching every bound slot of `pattern`, in insertion
  /// order, optionally restricted to those intersecting `locality`.
  std::vector<TimedTuple> query(const TriplePattern& pattern,
                                const std::optional<Interval>& locality = std::nullopt) const;

  /// Indices (into tuples()) of tuples with `name` as subject or entity object.
  std::vector<std::size_t> touching(const std::string& name) const;

  std::optional<Namespace> namespace_of(const std::string& name) const;
  bool knows(const std::string& name) const { return names_.contains(name); }

  const PropertyRegistry& registry() const noexcept { return registry_; }
  const ClassHierarchy& classes() const noexcept { return classes_; }

  friend bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b);

 private:
  void check_disjointness(const TimedTuple& t) const;

  PropertyRegistry registry_;
  ClassHierarchy classes_;
  std::vector<TimedTuple> tuples_;
  std::unordered_map<TimedTuple, std::size_t, TimedTupleHash> index_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_subject_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_object_;
  std::unordered_map<std::string, Namespace> names_;
};

/// <o, p^-1, s> with the same interval and sign.
/// Throws NoInverseError when p has no registered inverse or o is a data value.
TimedTuple invert_tuple(const KnowledgeGraph& kb, const TimedTuple& t);
bool can_invert(const KnowledgeGraph& kb, const TimedTuple& t);

struct InstanceInterval {
  std::string entity;
  Interval interval;

  friend bool operator==(const InstanceInterval&, const InstanceInterval&) = default;
};

/// Individuals with a positive type tuple for `cls` (or a subclass of it)
/// whose interval intersects `locality`, in insertion order, deduplicated.
std::vector<InstanceInterval> instances_of(const KnowledgeGraph& kb, const std::string& cls,
                                           const Interval& locality = Interval::universal());

/// True if `entity` has a positive type tuple for `cls` or a subclass.
bool is_instance_of(const KnowledgeGraph& kb, const std::string& entity, const std::string& cls);

/// Query under the registry's entailments: stored tuples, their inverse
/// views, and sub-properties of the pattern's property. Deduplicated.
std::vector<TimedTuple> query_entailed(const KnowledgeGraph& kb, const TriplePattern& pattern,
                                       const std::optional<Interval>& locality = std::nullopt);

}  // namespace plancomp
