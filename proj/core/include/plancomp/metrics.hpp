#pragma once

// Narrative metrics: attribute count, interaction time, Dale-Chall
// readability, and the ACXON-vs-baseline report.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "plancomp/acxon.hpp"

namespace plancomp {

std::size_t count_attributes(const Narrative& n);
std::size_t count_attributes(const SingleNarrative& n);

/// Words after replacing quote marks and hyphens with spaces; tokens
/// without a letter or digit are dropped.
std::vector<std::string> tokenize_words(std::string_view text);
std::size_t word_count(std::string_view text);

enum class Channel { Auditory, Visual };

inline constexpr double kAuditoryWordsPerMinute = 160.0;
inline constexpr double kVisualWordsPerMinute = 400.0;

/// Seconds to speak or read `text`.
double interaction_time(std::string_view text, Channel channel);

class FamiliarWords {
 public:
  /// The compiled-in list (2940 words).
  static const FamiliarWords& bundled();
  /// One lowercase word per line.
  static FamiliarWords parse(std::string_view text);
  static FamiliarWords load(const std::filesystem::path& path);

  bool contains(const std::string& word) const { return words_.contains(word); }
  /// contains(), extended to regular inflections of a listed word
  /// (-s, -es, -ed, -d, -ing, -er, -est, -ly, with e-drop, consonant
  /// doubling and y/i alternation).
  bool covers(const std::string& word) const;
  std::size_t size() const noexcept { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct DaleChallCounts {
  std::size_t words = 0;
  std::size_t difficult_words = 0;
  std::size_t sentences = 0;
};

/// Word, difficult-word and sentence counts used by dale_chall.
DaleChallCounts dale_chall_counts(std::string_view text, const FamiliarWords& familiar);

/// 0.1579 * PDW + 0.0496 * ASL, plus 3.6365 when PDW > 5, where PDW is the
/// percentage of words not covered by `familiar` and ASL the mean
/// sentence length. Numerals are familiar. Throws EmptyTextError for text without words.
double dale_chall(std::string_view text, const FamiliarWords& familiar = FamiliarWords::bundled());

struct MetricReport {
  double attribute_count = 0.0;
  double construction_time = 0.0;
  double interaction_auditory = 0.0;
  double interaction_visual = 0.0;
  double readability = 0.0;
};

struct ReportRow {
  std::string algorithm;  // "acxon" or "baseline"
  Specificity level = Specificity::Level1;
  std::size_t pairs = 0;
  MetricReport metrics;  // averages over pairs
};

struct ReportError {
  std::string algorithm;
  Specificity level;
  std::string message;
};

struct CompareReport {
  std::vector<ReportRow> rows;
  std::vector<ReportError> errors;
};

/// For each level, narrates every instantiated pair with ACXON and with the
/// baseline run once per instance (metrics summed, readability on the joined
/// text), and averages over pairs. No pairs yields no rows.
CompareReport compare_report(const KnowledgeGraph& kb, const std::vector<ClassPair>& class_pairs,
                             const Interval& locality, const std::vector<Specificity>& levels,
                             const std::optional<std::string>& restrict_class = std::nullopt,
                             const LabelTable& labels = LabelTable::defaults(),
                             const FamiliarWords& familiar = FamiliarWords::bundled());

/// Aligned plain-text table.
std::string format_report_table(const CompareReport& report);
/// Header plus `algorithm,level,tuples,construction_s,auditory_s,visual_s,dale_chall` rows.
std::string format_report_rows(const CompareReport& report);

}  // namespace plancomp
