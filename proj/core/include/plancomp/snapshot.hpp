#pragma once

// Line-oriented KB snapshots: one tuple per line, tab-separated
//
//   subject  property  object  t_i  t_f  sign
//
// `_` and `Inf` stand for an undetermined start and an infinite end; sign is
// `pos` or `neg`. Data-value objects are written as literals,
// "59"^^xsd:decimal or "text"^^xsd:string, so they never collide with
// entity names. Lines that are blank or start with `#` are ignored.

#include <iosfwd>
#include <string>

#include "plancomp/kb.hpp"

namespace plancomp {

void write_snapshot(const KnowledgeGraph& kb, std::ostream& out);
std::string snapshot_to_string(const KnowledgeGraph& kb);

/// Asserts every line into `kb` (which supplies the property registry).
/// Throws ParseError with the 1-based line number; assertion errors are
/// rethrown as ParseError too.
void read_snapshot(std::istream& in, KnowledgeGraph& kb);
void read_snapshot_string(const std::string& text, KnowledgeGraph& kb);

std::string format_time_point(const TimePoint& p);
/// Parses `_`, `Inf` or a non-negative number.
TimePoint parse_time_point(const std::string& token);

}  // namespace plancomp
