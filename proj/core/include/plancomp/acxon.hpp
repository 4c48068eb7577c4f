#pragma once

// Contrastive narratives for pairs of instances.
//
//   retrieve_instantiated_pairs -> retrieve_narrative_tuples (T_P)
//   -> extract_divergent_tuples per level (D_P) -> cast -> cluster -> order
//   -> group_and_render
//
// narrate_single is the per-instance, non-contrastive baseline.

#include <optional>
#include <string>
#include <vector>

#include "plancomp/kb.hpp"
#include "plancomp/labels.hpp"

namespace plancomp {

/// Traversal depth; each level includes the ones before it.
enum class Specificity { Level1 = 1, Level2 = 2, Level3 = 3 };

/// Throws std::invalid_argument outside 1..3.
Specificity specificity_from_int(int level);
inline int to_int(Specificity s) { return static_cast<int>(s); }

struct InstantiatedPair {
  InstanceInterval a;
  InstanceInterval b;

  friend bool operator==(const InstantiatedPair&, const InstantiatedPair&) = default;
};

struct ClassPair {
  std::string a;
  std::string b;
};

/// Instance pairs of the given class pairs whose type intervals intersect
/// `locality`. Each unordered pair appears once, entity names in
/// lexicographic order; the result is sorted.
std::vector<InstantiatedPair> retrieve_instantiated_pairs(const KnowledgeGraph& kb,
                                                          const std::vector<ClassPair>& class_pairs,
                                                          const Interval& locality);

/// T_P. Level 1: tuples between e_a and e_b. Level 2: tuples touching e_a or
/// e_b (other end restricted to instances of `restrict_class` when given),
/// plus tuples between objects reached through the same property from
/// either side. Level 3: tuples touching a level-2 object that intersect
/// both pair intervals, plus their same-path cross tuples. `type` tuples are
/// never retrieved; a tuple whose inverse is already present is skipped.
std::vector<TimedTuple> retrieve_narrative_tuples(
    const KnowledgeGraph& kb, const InstantiatedPair& pair, Specificity s,
    const std::optional<std::string>& restrict_class = std::nullopt);

/// D_P: `t_p` minus every non-divergent pair (different subjects, same
/// property, object, interval and sign) and minus the branches hanging off
/// their shared objects. Tuples pointing at a pair instance are compared in
/// inverted form. Input order is kept.
std::vector<TimedTuple> extract_divergent_tuples(const KnowledgeGraph& kb,
                                                 const std::vector<TimedTuple>& t_p,
                                                 const InstantiatedPair& pair);

/// D_P built level by level: the tuples first retrieved at level k are
/// judged against T_P at level k, and earlier verdicts are kept. Ordered
/// as T_P at level `s`.
std::vector<TimedTuple> divergent_tuples_by_level(
    const KnowledgeGraph& kb, const InstantiatedPair& pair, Specificity s,
    const std::optional<std::string>& restrict_class = std::nullopt);

/// Orients tuples touching e_a/e_b with the instance as subject, then
/// appends the rest, reversing a tuple whose inverse property is already in
/// use. Throws NoInverseError when a needed reversal is impossible.
std::vector<TimedTuple> cast(const KnowledgeGraph& kb, const std::vector<TimedTuple>& d_p,
                             const InstantiatedPair& pair);

enum class ClusterKind { PairLevel, Direct, Indirect, Unrelated };

/// Position of a tuple inside its cluster's sentence.
enum class Role {
  PairLevel,  // relates e_a and e_b
  SideA,      // first contrastive half
  SideB,      // second contrastive half
  Cross,      // links an object of side A with one of side B
  Free,       // unrelated clause
};

struct ClusterMember {
  TimedTuple tuple;
  Role role;
};

struct Cluster {
  ClusterKind kind;
  std::string property;
  std::vector<ClusterMember> members;

  std::size_t size() const noexcept { return members.size(); }
  std::vector<TimedTuple> tuples() const;
};

std::vector<Cluster> cluster(const KnowledgeGraph& kb, const std::vector<TimedTuple>& cast_tuples,
                             const InstantiatedPair& pair);

/// Kind order, then size descending, then property name. Inside a cluster,
/// `type` tuples move first and tuples are grouped by subject.
std::vector<Cluster> order(std::vector<Cluster> clusters);

/// One sentence per cluster, joined with single spaces.
std::string group_and_render(const std::vector<Cluster>& clusters, const InstantiatedPair& pair,
                             const LabelTable& labels = LabelTable::defaults());

struct Narrative {
  InstantiatedPair pair;
  std::size_t retrieved_count = 0;          // |T_P|
  std::vector<TimedTuple> divergent_tuples;  // D_P
  std::string text;
  Specificity specificity = Specificity::Level3;
};

struct NarrationError {
  InstantiatedPair pair;
  std::string message;
};

struct AcxonResult {
  std::vector<Narrative> narratives;
  std::vector<NarrationError> errors;
};

/// Narrative for one pair.
Narrative narrate_pair(const KnowledgeGraph& kb, const InstantiatedPair& pair, Specificity s,
                       const std::optional<std::string>& restrict_class = std::nullopt,
                       const LabelTable& labels = LabelTable::defaults());

/// One narrative per instantiated pair. A failing pair is reported in
/// `errors` without stopping the others.
AcxonResult acxon(const KnowledgeGraph& kb, const std::vector<ClassPair>& class_pairs,
                  const Interval& locality, Specificity s,
                  const std::optional<std::string>& restrict_class = std::nullopt,
                  const LabelTable& labels = LabelTable::defaults());

struct SingleNarrative {
  InstanceInterval instance;
  std::vector<TimedTuple> tuples;
  std::string text;
  Specificity specificity = Specificity::Level3;
};

/// Baseline: level 1 is the entity's class membership, level 2 adds the
/// tuples touching it, level 3 the tuples touching those objects (their
/// types included). No pruning, no contrast. Throws UnknownEntityError.
SingleNarrative narrate_single(const KnowledgeGraph& kb, const std::string& entity,
                               const Interval& locality, Specificity s,
                               const LabelTable& labels = LabelTable::defaults());

}  // namespace plancomp
