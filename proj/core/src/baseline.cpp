#include <algorithm>
#include <unordered_set>

#include <fmt/format.h>

#include "plancomp/acxon.hpp"
#include "render.hpp"

namespace plancomp {

namespace {

class Collector {
 public:
  explicit Collector(const KnowledgeGraph& kb) : kb_(kb) {}

  bool add(const TimedTuple& t) {
    if (seen_.contains(t)) return false;
    if (can_invert(kb_, t) && seen_.contains(invert_tuple(kb_, t))) return false;
    seen_.insert(t);
    out_.push_back(t);
    return true;
  }
  const std::vector<TimedTuple>& tuples() const { return out_; }

 private:
  const KnowledgeGraph& kb_;
  std::unordered_set<TimedTuple, TimedTupleHash> seen_;
  std::vector<TimedTuple> out_;
};

}  // namespace

SingleNarrative narrate_single(const KnowledgeGraph& kb, const std::string& entity,
                               const Interval& locality, Specificity s, const LabelTable& labels) {
  auto ns = kb.namespace_of(entity);
  if (!ns || *ns != Namespace::Individual)
    throw UnknownEntityError(fmt::format("unknown entity '{}'", entity));

  const auto types = kb.query(
      TriplePattern{.subject = entity, .property = std::string(kType), .sign = std::nullopt},
      locality);
  SingleNarrative n;
  n.instance = InstanceInterval{entity, types.empty() ? Interval::universal() : types.front().interval};
  n.specificity = s;

  Collector collected(kb);
  for (const auto& t : types) collected.add(t);

  const auto all = kb.tuples();
  std::vector<std::string> objects;
  if (s != Specificity::Level1) {
    for (std::size_t i : kb.touching(entity)) {
      const auto& t = all[i];
      if (t.property == kType || !intervals_intersect(t.interval, locality)) continue;
      collected.add(t);
      const std::string other = t.subject == entity
                                    ? (t.object.is_entity() ? t.object.name() : std::string())
                                    : t.subject;
      if (!other.empty() && other != entity &&
          std::find(objects.begin(), objects.end(), other) == objects.end())
        objects.push_back(other);
    }
  }
  if (s == Specificity::Level3) {
    std::vector<std::size_t> indices;
    for (const auto& o : objects) {
      auto touching = kb.touching(o);
      indices.insert(indices.end(), touching.begin(), touching.end());
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (std::size_t i : indices) {
      const auto& t = all[i];
      if (!intervals_intersect(t.interval, locality) ||
          !intervals_intersect(t.interval, n.instance.interval))
        continue;
      collected.add(t);
    }
  }
  n.tuples = collected.tuples();

  // Orientation: the entity as subject, then consistency with properties in use.
  std::vector<TimedTuple> oriented;
  std::unordered_set<std::string> present;
  for (const auto& t : n.tuples) {
    if (t.object_is(entity) && t.subject != entity && can_invert(kb, t)) {
      oriented.push_back(invert_tuple(kb, t));
    } else if (t.subject == entity) {
      oriented.push_back(t);
    } else {
      continue;
    }
    present.insert(oriented.back().property);
  }
  for (const auto& t : n.tuples) {
    if (t.subject == entity || t.object_is(entity)) continue;
    auto inv = kb.registry().inverse(t.property);
    if (inv && *inv != t.property && present.contains(*inv) && !present.contains(t.property) &&
        can_invert(kb, t)) {
      oriented.push_back(invert_tuple(kb, t));
    } else {
      oriented.push_back(t);
    }
    present.insert(oriented.back().property);
  }

  // One sentence for class membership, then one per property.
  std::vector<std::vector<TimedTuple>> groups(1);
  std::vector<std::string> properties;
  for (const auto& t : oriented) {
    if (t.property == kType) {
      groups.front().push_back(t);
      continue;
    }
    auto it = std::find(properties.begin(), properties.end(), t.property);
    if (it == properties.end()) {
      properties.push_back(t.property);
      groups.emplace_back();
      groups.back().push_back(t);
    } else {
      groups[static_cast<std::size_t>(it - properties.begin()) + 1].push_back(t);
    }
  }

  const std::vector<Interval> reference = {n.instance.interval};
  std::vector<std::string> sentences;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    std::vector<std::string> parts;
    for (const auto& c : detail::group_clauses(g))
      parts.push_back(detail::render_clause(c, reference, labels));
    sentences.push_back(detail::join(parts, ", and ") + ".");
  }
  n.text = detail::join(sentences, " ");
  return n;
}

}  // namespace plancomp
