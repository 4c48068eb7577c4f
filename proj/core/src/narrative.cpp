#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_set>

#include <fmt/format.h>

#include "plancomp/acxon.hpp"
#include "render.hpp"

namespace plancomp {

namespace detail {

namespace {

bool same_key(const Clause& c, const TimedTuple& t) {
  return c.subject == t.subject && c.properties.front() == t.property && c.interval == t.interval &&
         c.sign == t.sign;
}

}  // namespace

std::vector<Clause> group_clauses(const std::vector<TimedTuple>& tuples) {
  std::vector<Clause> by_object;
  for (const auto& t : tuples) {
    auto it = std::find_if(by_object.begin(), by_object.end(),
                           [&](const Clause& c) { return same_key(c, t); });
    if (it == by_object.end()) {
      by_object.push_back(Clause{t.subject, {t.property}, {t.object}, t.interval, t.sign, {}});
    } else if (std::find(it->objects.begin(), it->objects.end(), t.object) == it->objects.end()) {
      it->objects.push_back(t.object);
    }
  }

  std::vector<Clause> out;
  for (auto& c : by_object) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Clause& o) {
      return o.subject == c.subject && o.objects == c.objects && o.interval == c.interval &&
             o.sign == c.sign;
    });
    if (it == out.end()) {
      out.push_back(std::move(c));
    } else {
      it->properties.push_back(c.properties.front());
    }
  }
  return out;
}

std::string quote(const Term& t) { return fmt::format("`{}'", t.to_string()); }

std::string verb_phrase(const std::string& property, Sign sign, const LabelTable& labels) {
  std::string phrase = labels.phrase(property);
  if (sign == Sign::Positive) return phrase;
  if (phrase == "is") return "is not";
  if (phrase.starts_with("is ")) return "is not " + phrase.substr(3);
  return "not " + phrase;
}

std::string interval_suffix(const Interval& interval, const std::vector<Interval>& reference) {
  if (interval.is_universal()) return {};
  if (std::find(reference.begin(), reference.end(), interval) != reference.end()) return {};
  std::string out;
  if (interval.start.is_finite()) out += fmt::format(" from {}", interval.start.seconds());
  if (interval.end.is_finite()) out += fmt::format(" to {}", interval.end.seconds());
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string render_clause(const Clause& c, const std::vector<Interval>& reference,
                          const LabelTable& labels) {
  std::vector<std::string> verbs;
  for (const auto& p : c.properties) verbs.push_back(verb_phrase(p, c.sign, labels));
  std::vector<std::string> objects;
  for (const auto& o : c.objects) objects.push_back(quote(o));
  std::string out = fmt::format("{} {} {}{}", quote(Term(c.subject)), join(verbs, " and "),
                                join(objects, " and "), interval_suffix(c.interval, reference));
  for (const auto& s : c.subordinates) out += s;
  return out;
}

}  // namespace detail

namespace {

using detail::Clause;

bool is_pair_instance(const InstantiatedPair& pair, const std::string& name) {
  return name == pair.a.entity || name == pair.b.entity;
}

bool touches_instance(const InstantiatedPair& pair, const TimedTuple& t) {
  return is_pair_instance(pair, t.subject) ||
         (t.object.is_entity() && is_pair_instance(pair, t.object.name()));
}

bool is_pair_level(const InstantiatedPair& pair, const TimedTuple& t) {
  return (t.subject == pair.a.entity && t.object_is(pair.b.entity)) ||
         (t.subject == pair.b.entity && t.object_is(pair.a.entity));
}

int kind_rank(ClusterKind k) { return static_cast<int>(k); }

template <typename T>
bool contains(const std::vector<T>& v, const T& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

/// Groups `candidates` by property; a property with tuples on both sides
/// becomes a cluster of `kind`. side_of returns 0, 1 or -1 (no side).
/// Consumed tuples are removed from `candidates`.
template <typename SideOf>
void build_sided_clusters(std::vector<TimedTuple>& candidates, ClusterKind kind, SideOf side_of,
                          std::vector<Cluster>& out, std::vector<TimedTuple>& leftovers) {
  std::vector<std::string> properties;
  for (const auto& t : candidates) {
    if (side_of(t) >= 0 && !contains(properties, t.property)) properties.push_back(t.property);
  }
  std::vector<bool> used(candidates.size(), false);
  for (const auto& p : properties) {
    bool has_a = false;
    bool has_b = false;
    for (const auto& t : candidates) {
      if (t.property != p) continue;
      has_a = has_a || side_of(t) == 0;
      has_b = has_b || side_of(t) == 1;
    }
    Cluster c{kind, p, {}};
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const auto& t = candidates[i];
      int side = side_of(t);
      if (t.property != p || side < 0) continue;
      used[i] = true;
      if (has_a && has_b) {
        c.members.push_back(ClusterMember{t, side == 0 ? Role::SideA : Role::SideB});
      } else {
        leftovers.push_back(t);
      }
    }
    if (!c.members.empty()) out.push_back(std::move(c));
  }
  std::vector<TimedTuple> rest;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!used[i]) rest.push_back(std::move(candidates[i]));
  }
  candidates = std::move(rest);
}

/// Moves tuples linking an A-side object to a B-side object of a cluster
/// in `clusters` into that cluster as Cross members.
void attach_cross(std::vector<Cluster>& clusters, std::size_t first,
                  std::vector<TimedTuple>& remaining) {
  for (std::size_t ci = first; ci < clusters.size(); ++ci) {
    auto& c = clusters[ci];
    std::vector<Term> objs_a;
    std::vector<Term> objs_b;
    for (const auto& m : c.members) {
      if (m.role == Role::SideA) objs_a.push_back(m.tuple.object);
      if (m.role == Role::SideB) objs_b.push_back(m.tuple.object);
    }
    std::vector<TimedTuple> rest;
    for (auto& t : remaining) {
      const Term s(t.subject);
      const bool cross = (contains(objs_a, s) && contains(objs_b, t.object)) ||
                         (contains(objs_b, s) && contains(objs_a, t.object));
      if (cross) {
        c.members.push_back(ClusterMember{std::move(t), Role::Cross});
      } else {
        rest.push_back(std::move(t));
      }
    }
    remaining = std::move(rest);
  }
}

std::string render_unsided(const std::vector<TimedTuple>& tuples,
                           const std::vector<Interval>& reference, const LabelTable& labels) {
  std::vector<std::string> parts;
  for (const auto& c : detail::group_clauses(tuples))
    parts.push_back(detail::render_clause(c, reference, labels));
  return detail::join(parts, ", and ");
}

std::string render_sided(const Cluster& c, const std::vector<Interval>& reference,
                         const LabelTable& labels) {
  std::vector<TimedTuple> side_tuples[2];
  std::vector<TimedTuple> cross;
  int first_side = -1;
  for (const auto& m : c.members) {
    if (m.role == Role::SideA || m.role == Role::SideB) {
      int side = m.role == Role::SideA ? 0 : 1;
      if (first_side < 0) first_side = side;
      side_tuples[side].push_back(m.tuple);
    } else {
      cross.push_back(m.tuple);
    }
  }
  std::vector<Clause> halves[2] = {detail::group_clauses(side_tuples[0]),
                                   detail::group_clauses(side_tuples[1])};
  bool has_sub[2] = {false, false};
  std::vector<TimedTuple> orphans;
  std::map<const Clause*, std::vector<std::string>> introduced;

  for (const auto& t : cross) {
    Clause* host = nullptr;
    int host_side = -1;
    for (int side = 0; side < 2 && !host; ++side) {
      for (auto& clause : halves[side]) {
        if (contains(clause.objects, Term(t.subject))) {
          host = &clause;
          host_side = side;
          break;
        }
      }
    }
    if (!host) {
      orphans.push_back(t);
      continue;
    }
    const std::string tail =
        fmt::format("which {} {}{}", detail::verb_phrase(t.property, t.sign, labels),
                    detail::quote(t.object), detail::interval_suffix(t.interval, reference));
    auto& seen = introduced[host];
    if (host->objects.size() > 1 && !contains(seen, t.subject)) {
      host->subordinates.push_back(fmt::format(", and also `{}', {}", t.subject, tail));
      seen.push_back(t.subject);
    } else if (host->subordinates.empty()) {
      host->subordinates.push_back(", " + tail);
    } else {
      host->subordinates.push_back(", and " + tail);
    }
    has_sub[host_side] = true;
  }

  auto render_half = [&](int side) {
    std::vector<std::string> parts;
    for (const auto& clause : halves[side])
      parts.push_back(detail::render_clause(clause, reference, labels));
    return detail::join(parts, ", and ");
  };

  int first = first_side < 0 ? 0 : first_side;
  if (has_sub[1 - first] && !has_sub[first]) first = 1 - first;
  std::string out = render_half(first);
  const std::string second = render_half(1 - first);
  if (!second.empty()) out += (has_sub[first] ? "; while " : ", while ") + second;
  if (!orphans.empty()) out += ", and " + render_unsided(orphans, reference, labels);
  return out;
}

}  // namespace

std::vector<TimedTuple> Cluster::tuples() const {
  std::vector<TimedTuple> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.tuple);
  return out;
}

std::vector<TimedTuple> cast(const KnowledgeGraph& kb, const std::vector<TimedTuple>& d_p,
                             const InstantiatedPair& pair) {
  std::vector<TimedTuple> out;
  for (const auto& t : d_p) {
    if (!touches_instance(pair, t)) continue;
    out.push_back(is_pair_instance(pair, t.subject) ? t : invert_tuple(kb, t));
  }
  std::unordered_set<std::string> present;
  for (const auto& t : out) present.insert(t.property);

  for (const auto& t : d_p) {
    if (touches_instance(pair, t)) continue;
    auto inv = kb.registry().inverse(t.property);
    if (inv && *inv != t.property && present.contains(*inv) && !present.contains(t.property) &&
        t.object.is_entity()) {
      out.push_back(invert_tuple(kb, t));
    } else {
      out.push_back(t);
    }
    present.insert(out.back().property);
  }
  return out;
}

std::vector<Cluster> cluster(const KnowledgeGraph& kb, const std::vector<TimedTuple>& cast_tuples,
                             const InstantiatedPair& pair) {
  std::vector<Cluster> out;
  std::vector<TimedTuple> instance_tuples;
  std::vector<TimedTuple> remaining;

  Cluster pair_level{ClusterKind::PairLevel, {}, {}};
  for (const auto& t : cast_tuples) {
    if (is_pair_level(pair, t)) {
      if (pair_level.members.empty()) {
        pair_level.property = t.property;
        pair_level.members.push_back(ClusterMember{t, Role::PairLevel});
      } else {
        const std::string& subject = pair_level.members.front().tuple.subject;
        TimedTuple oriented = t.subject == subject || !can_invert(kb, t) ? t : invert_tuple(kb, t);
        pair_level.members.push_back(ClusterMember{std::move(oriented), Role::PairLevel});
      }
    } else if (is_pair_instance(pair, t.subject)) {
      instance_tuples.push_back(t);
    } else {
      remaining.push_back(t);
    }
  }
  if (!pair_level.members.empty()) out.push_back(std::move(pair_level));

  std::vector<TimedTuple> leftovers;
  const std::size_t direct_begin = out.size();
  build_sided_clusters(
      instance_tuples, ClusterKind::Direct,
      [&](const TimedTuple& t) { return t.subject == pair.a.entity ? 0 : 1; }, out, leftovers);
  attach_cross(out, direct_begin, remaining);

  std::vector<Term> objs[2];
  for (std::size_t i = direct_begin; i < out.size(); ++i) {
    for (const auto& m : out[i].members) {
      if (m.role == Role::SideA) objs[0].push_back(m.tuple.object);
      if (m.role == Role::SideB) objs[1].push_back(m.tuple.object);
    }
  }
  const std::size_t indirect_begin = out.size();
  build_sided_clusters(
      remaining, ClusterKind::Indirect,
      [&](const TimedTuple& t) {
        const Term s(t.subject);
        if (contains(objs[0], s)) return 0;
        if (contains(objs[1], s)) return 1;
        return -1;
      },
      out, leftovers);
  attach_cross(out, indirect_begin, remaining);

  // Unplaced tuples keep their cast order.
  std::unordered_set<TimedTuple, TimedTupleHash> placed;
  for (const auto& c : out) {
    for (const auto& m : c.members) placed.insert(m.tuple);
  }
  leftovers.clear();
  for (const auto& t : cast_tuples) {
    if (!placed.contains(t) && !is_pair_level(pair, t)) leftovers.push_back(t);
  }
  std::vector<std::string> properties;
  for (const auto& t : leftovers) {
    if (!contains(properties, t.property)) properties.push_back(t.property);
  }
  for (const auto& p : properties) {
    Cluster c{ClusterKind::Unrelated, p, {}};
    for (const auto& t : leftovers) {
      if (t.property == p) c.members.push_back(ClusterMember{t, Role::Free});
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Cluster> order(std::vector<Cluster> clusters) {
  std::stable_sort(clusters.begin(), clusters.end(), [](const Cluster& l, const Cluster& r) {
    return std::make_tuple(kind_rank(l.kind), r.size(), std::cref(l.property)) <
           std::make_tuple(kind_rank(r.kind), l.size(), std::cref(r.property));
  });
  for (auto& c : clusters) {
    std::vector<std::string> subjects;
    for (const auto& m : c.members) {
      if (!contains(subjects, m.tuple.subject)) subjects.push_back(m.tuple.subject);
    }
    std::vector<ClusterMember> sorted;
    sorted.reserve(c.members.size());
    for (const auto& m : c.members) {
      if (m.tuple.property == kType) sorted.push_back(m);
    }
    for (const auto& s : subjects) {
      for (const auto& m : c.members) {
        if (m.tuple.property != kType && m.tuple.subject == s) sorted.push_back(m);
      }
    }
    c.members = std::move(sorted);
  }
  return clusters;
}

std::string group_and_render(const std::vector<Cluster>& clusters, const InstantiatedPair& pair,
                             const LabelTable& labels) {
  const std::vector<Interval> reference = {pair.a.interval, pair.b.interval};
  std::vector<std::string> sentences;
  for (const auto& c : clusters) {
    if (c.members.empty()) continue;
    std::string body;
    switch (c.kind) {
      case ClusterKind::Direct:
      case ClusterKind::Indirect:
        body = render_sided(c, reference, labels);
        break;
      case ClusterKind::PairLevel:
      case ClusterKind::Unrelated:
        body = render_unsided(c.tuples(), reference, labels);
        break;
    }
    sentences.push_back(body + ".");
  }
  return detail::join(sentences, " ");
}

}  // namespace plancomp
