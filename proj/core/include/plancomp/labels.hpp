#pragma once

// Display phrases for properties.

#include <filesystem>
#include <string>
#include <unordered_map>

namespace plancomp {

/// "isCheaperPlanThan" -> "is cheaper plan than".
std::string split_camel_case(const std::string& name);

class LabelTable {
 public:
  /// Built-in phrases (definesTask -> "includes task", ...).
  static LabelTable defaults();
  /// No overrides: every property renders through split_camel_case.
  static LabelTable empty() { return LabelTable(); }

  /// Reads `property<TAB>phrase` lines on top of the current table.
  /// Blank lines and lines starting with `#` are skipped. Throws ParseError.
  void merge(const std::string& text);
  void merge_file(const std::filesystem::path& path);

  void set(const std::string& property, std::string phrase) {
    phrases_[property] = std::move(phrase);
  }
  std::string phrase(const std::string& property) const;

 private:
  std::unordered_map<std::string, std::string> phrases_;
};

}  // namespace plancomp
