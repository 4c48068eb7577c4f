#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "plancomp/ontology.hpp"

namespace plancomp::oracle {

namespace {

double lo(const TimePoint& p) {
  return p.is_finite() ? p.seconds() : -std::numeric_limits<double>::infinity();
}
double hi(const TimePoint& p) {
  return p.is_finite() ? p.seconds() : std::numeric_limits<double>::infinity();
}

std::string key_of(const Interval& i) {
  std::ostringstream s;
  s << static_cast<int>(i.start.kind()) << ':' << i.start.seconds() << '/'
    << static_cast<int>(i.end.kind()) << ':' << i.end.seconds();
  return s.str();
}

std::string term_key(const Term& t) {
  return t.is_entity() ? "e:" + t.name() : "v:" + t.value().to_string();
}

}  // namespace

bool intersect(const Interval& a, const Interval& b) {
  return lo(a.start) <= hi(b.end) && lo(b.start) <= hi(a.end);
}

std::vector<TimedTuple> query(const KnowledgeGraph& kb, const TriplePattern& pattern,
                              const std::optional<Interval>& locality) {
  std::vector<TimedTuple> out;
  for (const auto& t : kb.tuples()) {
    if (pattern.subject && t.subject != *pattern.subject) continue;
    if (pattern.property && t.property != *pattern.property) continue;
    if (pattern.object && !(t.object == *pattern.object)) continue;
    if (pattern.sign && t.sign != *pattern.sign) continue;
    if (locality && !intersect(t.interval, *locality)) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<TimedTuple> divergent(const KnowledgeGraph& kb, const std::vector<TimedTuple>& t_p,
                                  const InstantiatedPair& pair) {
  const std::set<std::string> instances = {pair.a.entity, pair.b.entity};

  // Instance-oriented view.
  std::vector<TimedTuple> view;
  for (const auto& t : t_p) {
    TimedTuple v = t;
    if (t.object.is_entity() && instances.count(t.object.name()) && !instances.count(t.subject)) {
      if (auto inv = kb.registry().inverse(t.property)) {
        v = TimedTuple{t.object.name(), *inv, Term(t.subject), t.interval, t.sign};
      }
    }
    view.push_back(v);
  }

  // (entity, side, path) triples, layer by layer from the two instances.
  using Place = std::tuple<std::string, int, std::string>;
  std::set<Place> places = {{pair.a.entity, 0, ""}, {pair.b.entity, 1, ""}};
  std::set<Place> frontier = places;
  for (int layer = 0; layer < 2; ++layer) {
    std::set<Place> next;
    for (const auto& [entity, side, path] : frontier) {
      for (const auto& v : view) {
        if (!v.object.is_entity()) continue;
        const std::string prefix = path.empty() ? "" : path + "/";
        if (v.subject == entity && !instances.count(v.object.name()))
          next.insert({v.object.name(), side, prefix + v.property});
        if (v.object.name() == entity && !instances.count(v.subject)) {
          auto inv = kb.registry().inverse(v.property);
          next.insert({v.subject, side, prefix + (inv ? *inv : "^" + v.property)});
        }
      }
    }
    // Entities already placed at a smaller depth keep only those places.
    std::set<std::string> placed;
    for (const auto& pl : places) placed.insert(std::get<0>(pl));
    std::set<Place> fresh;
    for (const auto& pl : next) {
      if (!placed.count(std::get<0>(pl))) fresh.insert(pl);
    }
    places.insert(fresh.begin(), fresh.end());
    frontier = std::move(fresh);
  }
  auto opposite = [&](const std::string& x, const std::string& y) {
    for (const auto& [ex, sx, px] : places) {
      if (ex != x) continue;
      for (const auto& [ey, sy, py] : places) {
        if (ey == y && sx != sy && px == py) return true;
      }
    }
    return false;
  };

  std::vector<bool> drop(t_p.size(), false);
  std::set<std::string> roots;
  for (std::size_t i = 0; i < view.size(); ++i) {
    for (std::size_t j = 0; j < view.size(); ++j) {
      const auto& v = view[i];
      const auto& w = view[j];
      if (v.subject == w.subject || v.property != w.property ||
          term_key(v.object) != term_key(w.object) || key_of(v.interval) != key_of(w.interval) ||
          v.sign != w.sign || !opposite(v.subject, w.subject))
        continue;
      drop[i] = true;
      if (v.object.is_entity() && !instances.count(v.object.name())) roots.insert(v.object.name());
    }
  }

  // Entities one step from an instance.
  std::set<std::string> direct;
  for (const auto& [entity, side, path] : places) {
    if (!path.empty() && path.find('/') == std::string::npos) direct.insert(entity);
  }

  // Everything reachable from a root through subject -> object edges of T_P.
  std::set<std::string> reach = roots;
  std::deque<std::string> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    const std::string n = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < t_p.size(); ++i) {
      if (drop[i] || t_p[i].subject != n) continue;
      const Term& o = t_p[i].object;
      if (!o.is_entity() || instances.count(o.name()) || direct.count(o.name())) continue;
      if (reach.insert(o.name()).second) queue.push_back(o.name());
    }
  }
  for (std::size_t i = 0; i < t_p.size(); ++i) {
    if (reach.count(t_p[i].subject)) drop[i] = true;
  }

  std::vector<TimedTuple> out;
  for (std::size_t i = 0; i < t_p.size(); ++i) {
    if (!drop[i]) out.push_back(t_p[i]);
  }
  return out;
}

Verdict dominance(const KnowledgeGraph& kb, const std::string& plan_a, const std::string& plan_b) {
  auto values = [&](const std::string& plan) {
    std::map<std::string, double> out;
    for (const auto& t : kb.tuples()) {
      if (t.subject != plan || t.sign != Sign::Positive) continue;
      for (QualityKind k : kAllQualityKinds) {
        if (t.property != info(k).has_relation || !t.object.is_entity()) continue;
        for (const auto& u : kb.tuples()) {
          if (u.subject == t.object.name() && u.property == vocab::kHasDataValue &&
              !u.object.is_entity() && u.object.value().is_number())
            out[std::string(info(k).name)] = u.object.value().as_number();
        }
      }
    }
    return out;
  };
  const auto va = values(plan_a);
  const auto vb = values(plan_b);
  int better = 0, worse = 0, equal = 0;
  for (const auto& [kind, a] : va) {
    auto it = vb.find(kind);
    if (it == vb.end()) continue;
    if (a < it->second) ++better;
    else if (a > it->second) ++worse;
    else ++equal;
  }
  const int n = better + worse + equal;
  if (n > 0 && better == n) return Verdict::Better;
  if (n > 0 && worse == n) return Verdict::Worse;
  if (n > 0 && equal == n) return Verdict::Equivalent;
  return Verdict::Undecided;
}

std::size_t baseline_level2_count(const KnowledgeGraph& kb, const std::string& entity) {
  std::vector<TimedTuple> kept;
  auto already = [&](const TimedTuple& t) {
    for (const auto& k : kept) {
      if (k == t) return true;
      auto inv = kb.registry().inverse(t.property);
      if (inv && t.object.is_entity() && k.subject == t.object.name() && k.property == *inv &&
          k.object_is(t.subject) && k.interval == t.interval && k.sign == t.sign)
        return true;
    }
    return false;
  };
  for (const auto& t : kb.tuples()) {
    if (t.subject == entity && t.property == "type" && !already(t)) kept.push_back(t);
  }
  for (const auto& t : kb.tuples()) {
    if (t.property == "type") continue;
    if ((t.subject == entity || t.object_is(entity)) && !already(t)) kept.push_back(t);
  }
  return kept.size();
}

std::size_t word_count(const std::string& text) {
  std::size_t n = 0;
  bool in_word = false;
  bool has_alnum = false;
  for (char c : text + " ") {
    const bool sep = std::isspace(static_cast<unsigned char>(c)) || c == '`' || c == '\'' ||
                     c == '"' || c == '-';
    if (sep) {
      if (in_word && has_alnum) ++n;
      in_word = has_alnum = false;
    } else {
      in_word = true;
      has_alnum = has_alnum || std::isalnum(static_cast<unsigned char>(c));
    }
  }
  return n;
}

std::vector<TimedTuple> divergent_by_level(const KnowledgeGraph& kb, const InstantiatedPair& pair,
                                           Specificity s) {
  auto in = [](const std::vector<TimedTuple>& v, const TimedTuple& t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };
  std::vector<TimedTuple> previous;
  std::vector<TimedTuple> kept;
  std::vector<TimedTuple> t_p;
  for (int k = 1; k <= to_int(s); ++k) {
    t_p = retrieve_narrative_tuples(kb, pair, specificity_from_int(k));
    for (const auto& t : divergent(kb, t_p, pair)) {
      if (!in(previous, t) && !in(kept, t)) kept.push_back(t);
    }
    previous.insert(previous.end(), t_p.begin(), t_p.end());
  }
  std::vector<TimedTuple> out;
  for (const auto& t : t_p) {
    if (in(kept, t)) out.push_back(t);
  }
  return out;
}

}  // namespace plancomp::oracle
