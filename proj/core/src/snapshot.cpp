#include "plancomp/snapshot.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace plancomp {

namespace {

constexpr std::string_view kNumberSuffix = "\"^^xsd:decimal";
constexpr std::string_view kTextSuffix = "\"^^xsd:string";

std::string format_object(const Term& o) {
  if (o.is_entity()) return o.name();
  const DataValue& v = o.value();
  if (v.is_number()) return fmt::format("\"{}{}", v.as_number(), kNumberSuffix);
  return fmt::format("\"{}{}", v.as_text(), kTextSuffix);
}

std::optional<double> parse_number(std::string_view s) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

Term parse_object(const std::string& field, std::size_t line) {
  if (field.empty() || field.front() != '"') return Term(field);
  std::string_view f(field);
  if (f.ends_with(kNumberSuffix)) {
    auto body = f.substr(1, f.size() - 1 - kNumberSuffix.size());
    auto n = parse_number(body);
    if (!n) throw ParseError(line, fmt::format("bad numeric literal {}", field));
    return Term(DataValue::number(*n));
  }
  if (f.ends_with(kTextSuffix)) {
    return Term(DataValue::text(std::string(f.substr(1, f.size() - 1 - kTextSuffix.size()))));
  }
  throw ParseError(line, fmt::format("unterminated literal {}", field));
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find('\t', start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string format_time_point(const TimePoint& p) {
  switch (p.kind()) {
    case TimePoint::Kind::Undetermined:
      return "_";
    case TimePoint::Kind::Infinity:
      return "Inf";
    case TimePoint::Kind::Finite:
      break;
  }
  return fmt::format("{}", p.seconds());
}

TimePoint parse_time_point(const std::string& token) {
  if (token == "_") return TimePoint::undetermined();
  if (token == "Inf") return TimePoint::infinity();
  auto n = parse_number(token);
  if (!n) throw InvalidTupleError(fmt::format("bad time point '{}'", token));
  return TimePoint::at(*n);
}

void write_snapshot(const KnowledgeGraph& kb, std::ostream& out) {
  for (const auto& t : kb.tuples()) {
    out << t.subject << '\t' << t.property << '\t' << format_object(t.object) << '\t'
        << format_time_point(t.interval.start) << '\t' << format_time_point(t.interval.end) << '\t'
        << (t.sign == Sign::Positive ? "pos" : "neg") << '\n';
  }
}

std::string snapshot_to_string(const KnowledgeGraph& kb) {
  std::ostringstream out;
  write_snapshot(kb, out);
  return out.str();
}

void read_snapshot(std::istream& in, KnowledgeGraph& kb) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 6)
      throw ParseError(number, fmt::format("expected 6 tab-separated fields, got {}", fields.size()));
    Sign sign;
    if (fields[5] == "pos") {
      sign = Sign::Positive;
    } else if (fields[5] == "neg") {
      sign = Sign::Negative;
    } else {
      throw ParseError(number, fmt::format("bad sign '{}'", fields[5]));
    }
    try {
      TimedTuple t{fields[0], fields[1], parse_object(fields[2], number),
                   Interval{parse_time_point(fields[3]), parse_time_point(fields[4])}, sign};
      kb.assert_tuple(t);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(number, e.what());
    }
  }
}

void read_snapshot_string(const std::string& text, KnowledgeGraph& kb) {
  std::istringstream in(text);
  read_snapshot(in, kb);
}

}  // namespace plancomp
