#include "plancomp/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace plancomp {

namespace detail {
std::string_view bundled_familiar_words();
}

namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

bool is_numeral(const std::string& token) {
  bool digit = false;
  for (char c : token) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit;
}

std::string normalize(const std::string& token) {
  std::string out;
  for (char c : token) {
    if (is_alnum(c)) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

/// Text split after every '.', '!' or '?' that is followed by whitespace or
/// the end of the text.
std::vector<std::string_view> split_sentences(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') continue;
    if (i + 1 < text.size() && !std::isspace(static_cast<unsigned char>(text[i + 1]))) continue;
    out.push_back(text.substr(begin, i + 1 - begin));
    begin = i + 1;
  }
  if (begin < text.size()) out.push_back(text.substr(begin));
  return out;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Accumulator {
  MetricReport sum;
  std::size_t pairs = 0;
  std::size_t readable = 0;

  void add(std::size_t tuples, double construction, const std::string& text,
           const FamiliarWords& familiar) {
    ++pairs;
    sum.attribute_count += static_cast<double>(tuples);
    sum.construction_time += construction;
    sum.interaction_auditory += interaction_time(text, Channel::Auditory);
    sum.interaction_visual += interaction_time(text, Channel::Visual);
    if (word_count(text) > 0) {
      sum.readability += dale_chall(text, familiar);
      ++readable;
    }
  }

  MetricReport average() const {
    MetricReport m;
    if (pairs == 0) return m;
    const auto n = static_cast<double>(pairs);
    m.attribute_count = sum.attribute_count / n;
    m.construction_time = sum.construction_time / n;
    m.interaction_auditory = sum.interaction_auditory / n;
    m.interaction_visual = sum.interaction_visual / n;
    if (readable > 0) m.readability = sum.readability / static_cast<double>(readable);
    return m;
  }
};

}  // namespace

std::size_t count_attributes(const Narrative& n) { return n.divergent_tuples.size(); }
std::size_t count_attributes(const SingleNarrative& n) { return n.tuples.size(); }

std::vector<std::string> tokenize_words(std::string_view text) {
  std::string cleaned(text);
  for (char& c : cleaned) {
    if (c == '`' || c == '\'' || c == '"' || c == '-') c = ' ';
  }
  std::vector<std::string> out;
  std::istringstream in(cleaned);
  for (std::string tok; in >> tok;) {
    if (std::any_of(tok.begin(), tok.end(), is_alnum)) out.push_back(std::move(tok));
  }
  return out;
}

std::size_t word_count(std::string_view text) { return tokenize_words(text).size(); }

double interaction_time(std::string_view text, Channel channel) {
  const double rate = channel == Channel::Auditory ? kAuditoryWordsPerMinute : kVisualWordsPerMinute;
  return static_cast<double>(word_count(text)) * 60.0 / rate;
}

const FamiliarWords& FamiliarWords::bundled() {
  static const FamiliarWords words = parse(detail::bundled_familiar_words());
  return words;
}

FamiliarWords FamiliarWords::parse(std::string_view text) {
  FamiliarWords out;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    auto word = normalize(line);
    if (!word.empty()) out.words_.insert(std::move(word));
  }
  return out;
}

FamiliarWords FamiliarWords::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read word list " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

bool FamiliarWords::covers(const std::string& word) const {
  if (contains(word)) return true;
  static constexpr std::string_view kSuffixes[] = {"ing", "est", "ed", "er", "ly", "es", "s", "d"};
  for (std::string_view suffix : kSuffixes) {
    if (word.size() < suffix.size() + 2 || !word.ends_with(suffix)) continue;
    const std::string base = word.substr(0, word.size() - suffix.size());
    if (contains(base) || contains(base + "e")) return true;
    const std::size_t n = base.size();
    if (n >= 3 && base[n - 1] == base[n - 2] && contains(base.substr(0, n - 1))) return true;
    if (base.back() == 'i' && contains(base.substr(0, n - 1) + "y")) return true;
  }
  return false;
}

DaleChallCounts dale_chall_counts(std::string_view text, const FamiliarWords& familiar) {
  DaleChallCounts counts;
  for (auto sentence : split_sentences(text)) {
    const auto tokens = tokenize_words(sentence);
    if (tokens.empty()) continue;
    ++counts.sentences;
    for (const auto& tok : tokens) {
      ++counts.words;
      if (is_numeral(tok)) continue;
      if (!familiar.covers(normalize(tok))) ++counts.difficult_words;
    }
  }
  return counts;
}

double dale_chall(std::string_view text, const FamiliarWords& familiar) {
  const auto c = dale_chall_counts(text, familiar);
  if (c.words == 0) throw EmptyTextError("text has no words");
  const double pdw = 100.0 * static_cast<double>(c.difficult_words) / static_cast<double>(c.words);
  const double asl = static_cast<double>(c.words) / static_cast<double>(c.sentences);
  double score = 0.1579 * pdw + 0.0496 * asl;
  if (pdw > 5.0) score += 3.6365;
  return score;
}

CompareReport compare_report(const KnowledgeGraph& kb, const std::vector<ClassPair>& class_pairs,
                             const Interval& locality, const std::vector<Specificity>& levels,
                             const std::optional<std::string>& restrict_class,
                             const LabelTable& labels, const FamiliarWords& familiar) {
  CompareReport report;
  const auto pairs = retrieve_instantiated_pairs(kb, class_pairs, locality);
  if (pairs.empty()) return report;

  for (Specificity level : levels) {
    Accumulator acxon_acc;
    Accumulator baseline_acc;
    for (const auto& pair : pairs) {
      try {
        const auto start = Clock::now();
        const auto n = narrate_pair(kb, pair, level, restrict_class, labels);
        acxon_acc.add(count_attributes(n), seconds_since(start), n.text, familiar);
      } catch (const Error& e) {
        report.errors.push_back(ReportError{"acxon", level, e.what()});
      }
      try {
        const auto start = Clock::now();
        const auto na = narrate_single(kb, pair.a.entity, locality, level, labels);
        const auto nb = narrate_single(kb, pair.b.entity, locality, level, labels);
        const double elapsed = seconds_since(start);
        const std::string text = na.text.empty() ? nb.text
                                 : nb.text.empty() ? na.text
                                                   : na.text + " " + nb.text;
        baseline_acc.add(count_attributes(na) + count_attributes(nb), elapsed, text, familiar);
      } catch (const Error& e) {
        report.errors.push_back(ReportError{"baseline", level, e.what()});
      }
    }
    report.rows.push_back(ReportRow{"acxon", level, acxon_acc.pairs, acxon_acc.average()});
    report.rows.push_back(ReportRow{"baseline", level, baseline_acc.pairs, baseline_acc.average()});
  }
  return report;
}

std::string format_report_table(const CompareReport& report) {
  std::string out = fmt::format("{:<10} {:>5} {:>10} {:>14} {:>11} {:>10} {:>10}\n", "algorithm",
                                "level", "tuples", "construction_s", "auditory_s", "visual_s",
                                "dale_chall");
  for (const auto& r : report.rows) {
    const auto& m = r.metrics;
    out += fmt::format("{:<10} {:>5} {:>10.2f} {:>14.6f} {:>11.2f} {:>10.2f} {:>10.2f}\n",
                       r.algorithm, to_int(r.level), m.attribute_count, m.construction_time,
                       m.interaction_auditory, m.interaction_visual, m.readability);
  }
  return out;
}

std::string format_report_rows(const CompareReport& report) {
  std::string out = "algorithm,level,tuples,construction_s,auditory_s,visual_s,dale_chall\n";
  for (const auto& r : report.rows) {
    const auto& m = r.metrics;
    out += fmt::format("{},{},{},{},{},{},{}\n", r.algorithm, to_int(r.level), m.attribute_count,
                       m.construction_time, m.interaction_auditory, m.interaction_visual,
                       m.readability);
  }
  return out;
}

}  // namespace plancomp
