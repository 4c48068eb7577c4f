#include "plancomp/acxon.hpp"

namespace plancomp {

Narrative narrate_pair(const KnowledgeGraph& kb, const InstantiatedPair& pair, Specificity s,
                       const std::optional<std::string>& restrict_class, const LabelTable& labels) {
  Narrative n;
  n.pair = pair;
  n.specificity = s;
  n.retrieved_count = retrieve_narrative_tuples(kb, pair, s, restrict_class).size();
  n.divergent_tuples = divergent_tuples_by_level(kb, pair, s, restrict_class);
  const auto clusters = order(cluster(kb, cast(kb, n.divergent_tuples, pair), pair));
  n.text = group_and_render(clusters, pair, labels);
  return n;
}

AcxonResult acxon(const KnowledgeGraph& kb, const std::vector<ClassPair>& class_pairs,
                  const Interval& locality, Specificity s,
                  const std::optional<std::string>& restrict_class, const LabelTable& labels) {
  AcxonResult result;
  for (const auto& pair : retrieve_instantiated_pairs(kb, class_pairs, locality)) {
    try {
      result.narratives.push_back(narrate_pair(kb, pair, s, restrict_class, labels));
    } catch (const Error& e) {
      result.errors.push_back(NarrationError{pair, e.what()});
    }
  }
  return result;
}

}  // namespace plancomp
