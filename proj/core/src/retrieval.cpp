#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "plancomp/acxon.hpp"

namespace plancomp {

namespace {

struct Reached {
  std::string entity;
  int side;          // 0: e_a, 1: e_b
  std::string path;  // normalized properties from the instance, '/'-joined
};

/// Property as read from `from`'s end of the tuple.
std::string property_from_object(const KnowledgeGraph& kb, const std::string& p) {
  if (auto inv = kb.registry().inverse(p)) return *inv;
  return "^" + p;
}

class TupleCollector {
 public:
  explicit TupleCollector(const KnowledgeGraph& kb) : kb_(kb) {}

  void add(const TimedTuple& t) {
    if (seen_.contains(t)) return;
    if (can_invert(kb_, t) && seen_.contains(invert_tuple(kb_, t))) return;
    seen_.insert(t);
    out_.push_back(t);
  }
  std::vector<TimedTuple> take() { return std::move(out_); }

 private:
  const KnowledgeGraph& kb_;
  std::unordered_set<TimedTuple, TimedTupleHash> seen_;
  std::vector<TimedTuple> out_;
};

bool is_type(const TimedTuple& t) { return t.property == kType; }

/// Tuples <x, q, y> with x reached from one side and y from the other along
/// the same path.
void add_cross_tuples(const KnowledgeGraph& kb, const std::vector<Reached>& reached,
                      const InstantiatedPair& pair, bool check_intervals, TupleCollector& out) {
  auto matches = [&](const std::string& x, const std::string& y) {
    for (const auto& rx : reached) {
      if (rx.entity != x) continue;
      for (const auto& ry : reached) {
        if (ry.entity == y && ry.side != rx.side && ry.path == rx.path) return true;
      }
    }
    return false;
  };
  for (const auto& t : kb.tuples()) {
    if (is_type(t) || !t.object.is_entity()) continue;
    if (check_intervals && (!intervals_intersect(t.interval, pair.a.interval) ||
                            !intervals_intersect(t.interval, pair.b.interval)))
      continue;
    if (matches(t.subject, t.object.name())) out.add(t);
  }
}

}  // namespace

std::vector<InstantiatedPair> retrieve_instantiated_pairs(const KnowledgeGraph& kb,
                                                          const std::vector<ClassPair>& class_pairs,
                                                          const Interval& locality) {
  std::vector<InstantiatedPair> out;
  for (const auto& cp : class_pairs) {
    const auto as = instances_of(kb, cp.a, locality);
    const auto bs = instances_of(kb, cp.b, locality);
    for (const auto& x : as) {
      for (const auto& y : bs) {
        if (x.entity == y.entity) continue;
        InstantiatedPair p = x.entity < y.entity ? InstantiatedPair{x, y} : InstantiatedPair{y, x};
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const InstantiatedPair& l, const InstantiatedPair& r) {
    return std::tie(l.a.entity, l.b.entity) < std::tie(r.a.entity, r.b.entity);
  });
  return out;
}

std::vector<TimedTuple> retrieve_narrative_tuples(const KnowledgeGraph& kb,
                                                  const InstantiatedPair& pair, Specificity s,
                                                  const std::optional<std::string>& restrict_class) {
  const std::string& ea = pair.a.entity;
  const std::string& eb = pair.b.entity;
  TupleCollector out(kb);

  for (const auto& t : kb.tuples()) {
    if (is_type(t)) continue;
    if ((t.subject == ea && t.object_is(eb)) || (t.subject == eb && t.object_is(ea))) out.add(t);
  }
  if (s == Specificity::Level1) return out.take();

  std::vector<Reached> level2;
  for (const auto& t : kb.tuples()) {
    if (is_type(t)) continue;
    for (int side = 0; side < 2; ++side) {
      const std::string& e = side == 0 ? ea : eb;
      const std::string& other_instance = side == 0 ? eb : ea;
      std::optional<Term> other;
      std::string path;
      if (t.subject == e && !t.object_is(other_instance)) {
        other = t.object;
        path = t.property;
      } else if (t.object_is(e) && t.subject != other_instance) {
        other = Term(t.subject);
        path = property_from_object(kb, t.property);
      } else {
        continue;
      }
      if (restrict_class &&
          (!other->is_entity() || !is_instance_of(kb, other->name(), *restrict_class)))
        continue;
      out.add(t);
      if (other->is_entity()) level2.push_back(Reached{other->name(), side, std::move(path)});
    }
  }
  add_cross_tuples(kb, level2, pair, false, out);
  if (s == Specificity::Level2) return out.take();

  std::vector<Reached> level3;
  for (const auto& t : kb.tuples()) {
    if (is_type(t)) continue;
    if (!intervals_intersect(t.interval, pair.a.interval) ||
        !intervals_intersect(t.interval, pair.b.interval))
      continue;
    bool touched = false;
    for (const auto& r : level2) {
      std::optional<Term> other;
      std::string step;
      if (t.subject == r.entity) {
        other = t.object;
        step = t.property;
      } else if (t.object_is(r.entity)) {
        other = Term(t.subject);
        step = property_from_object(kb, t.property);
      } else {
        continue;
      }
      touched = true;
      if (other->is_entity() && other->name() != ea && other->name() != eb)
        level3.push_back(Reached{other->name(), r.side, r.path + "/" + step});
    }
    if (touched) out.add(t);
  }
  add_cross_tuples(kb, level3, pair, true, out);
  return out.take();
}

std::vector<TimedTuple> extract_divergent_tuples(const KnowledgeGraph& kb,
                                                 const std::vector<TimedTuple>& t_p,
                                                 const InstantiatedPair& pair) {
  const std::string& ea = pair.a.entity;
  const std::string& eb = pair.b.entity;
  auto is_instance = [&](const std::string& n) { return n == ea || n == eb; };

  std::vector<TimedTuple> view;
  view.reserve(t_p.size());
  for (const auto& t : t_p) {
    if (t.object.is_entity() && is_instance(t.object.name()) && !is_instance(t.subject) &&
        can_invert(kb, t)) {
      view.push_back(invert_tuple(kb, t));
    } else {
      view.push_back(t);
    }
  }

  // Positions of entities relative to the pair: side and property path from
  // the instance at the entity's smallest depth (at most two steps, read in
  // either direction). Two tuples only pair up when their subjects sit at
  // the same path on opposite sides.
  using Position = std::pair<int, std::string>;
  auto path_depth = [](const std::string& path) -> std::size_t {
    return path.empty() ? 0 : static_cast<std::size_t>(std::count(path.begin(), path.end(), '/')) + 1;
  };
  std::unordered_map<std::string, std::vector<Position>> positions;
  positions[ea].push_back({0, ""});
  positions[eb].push_back({1, ""});
  auto extend = [&](std::size_t depth) {
    std::vector<std::pair<std::string, Position>> found;
    for (const auto& v : view) {
      if (!v.object.is_entity()) continue;
      const std::string& o = v.object.name();
      auto step = [&](const std::string& from, const std::string& to, const std::string& p) {
        if (is_instance(to)) return;
        auto it = positions.find(from);
        if (it == positions.end()) return;
        for (const auto& [side, path] : it->second) {
          if (path_depth(path) != depth) continue;
          found.push_back({to, {side, path.empty() ? p : path + "/" + p}});
        }
      };
      step(v.subject, o, v.property);
      step(o, v.subject, property_from_object(kb, v.property));
    }
    for (auto& [entity, pos] : found) {
      auto& list = positions[entity];
      // Only the shallowest positions of an entity count.
      if (!list.empty() && path_depth(list.front().second) < path_depth(pos.second)) continue;
      if (std::find(list.begin(), list.end(), pos) == list.end()) list.push_back(std::move(pos));
    }
  };
  extend(0);
  extend(1);
  auto opposite = [&](const std::string& x, const std::string& y) {
    auto ix = positions.find(x);
    auto iy = positions.find(y);
    if (ix == positions.end() || iy == positions.end()) return false;
    for (const auto& px : ix->second) {
      for (const auto& py : iy->second) {
        if (px.first != py.first && px.second == py.second) return true;
      }
    }
    return false;
  };

  auto is_direct = [&](const std::string& n) {
    auto it = positions.find(n);
    return it != positions.end() && path_depth(it->second.front().second) == 1;
  };

  std::vector<bool> pruned(t_p.size(), false);
  std::unordered_set<std::string> branch_roots;
  for (std::size_t i = 0; i < view.size(); ++i) {
    for (std::size_t j = i + 1; j < view.size(); ++j) {
      const auto& x = view[i];
      const auto& y = view[j];
      if (x.subject != y.subject && x.property == y.property && x.object == y.object &&
          x.interval == y.interval && x.sign == y.sign && opposite(x.subject, y.subject)) {
        pruned[i] = pruned[j] = true;
        if (x.object.is_entity() && !is_instance(x.object.name()))
          branch_roots.insert(x.object.name());
      }
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < t_p.size(); ++i) {
      if (pruned[i] || !branch_roots.contains(t_p[i].subject)) continue;
      pruned[i] = true;
      changed = true;
      // The walk stops at the instances' own direct objects.
      const Term& o = t_p[i].object;
      if (o.is_entity() && !is_instance(o.name()) && !is_direct(o.name()))
        branch_roots.insert(o.name());
    }
  }

  std::vector<TimedTuple> out;
  for (std::size_t i = 0; i < t_p.size(); ++i) {
    if (!pruned[i]) out.push_back(t_p[i]);
  }
  return out;
}

Specificity specificity_from_int(int level) {
  if (level < 1 || level > 3) throw std::invalid_argument("specificity must be 1, 2 or 3");
  return static_cast<Specificity>(level);
}

std::vector<TimedTuple> divergent_tuples_by_level(const KnowledgeGraph& kb,
                                                  const InstantiatedPair& pair, Specificity s,
                                                  const std::optional<std::string>& restrict_class) {
  std::unordered_set<TimedTuple, TimedTupleHash> earlier;
  std::unordered_set<TimedTuple, TimedTupleHash> kept;
  std::vector<TimedTuple> t_p;
  for (int k = 1; k <= to_int(s); ++k) {
    t_p = retrieve_narrative_tuples(kb, pair, specificity_from_int(k), restrict_class);
    for (auto& t : extract_divergent_tuples(kb, t_p, pair)) {
      if (!earlier.contains(t)) kept.insert(std::move(t));
    }
    earlier.insert(t_p.begin(), t_p.end());
  }
  std::vector<TimedTuple> out;
  for (const auto& t : t_p) {
    if (kept.contains(t)) out.push_back(t);
  }
  return out;
}

}  // namespace plancomp
