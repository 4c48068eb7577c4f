#include "plancomp/labels.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "plancomp/errors.hpp"

namespace plancomp {

std::string split_camel_case(const std::string& name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const auto c = static_cast<unsigned char>(name[i]);
    if (std::isupper(c)) {
      if (i > 0 && out.back() != ' ') out += ' ';
      out += static_cast<char>(std::tolower(c));
    } else if (c == '_') {
      if (!out.empty() && out.back() != ' ') out += ' ';
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

LabelTable LabelTable::defaults() {
  LabelTable t;
  t.set("definesTask", "includes task");
  t.set("hasWorseQualityValueThan", "has a higher value than");
  t.set("hasBetterQualityValueThan", "has a lower value than");
  t.set("hasEquivalentQualityValueThan", "has the same value as");
  t.set("hasDataValue", "has value");
  t.set("type", "is a");
  return t;
}

void LabelTable::merge(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size())
      throw ParseError(number, "expected property<TAB>phrase");
    set(line.substr(0, tab), line.substr(tab + 1));
  }
}

void LabelTable::merge_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read label table " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  merge(buf.str());
}

std::string LabelTable::phrase(const std::string& property) const {
  if (auto it = phrases_.find(property); it != phrases_.end()) return it->second;
  return split_camel_case(property);
}

}  // namespace plancomp
