#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plancomp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Knowledge base.
class ContradictionError : public Error {
 public:
  using Error::Error;
};
class NamespaceError : public Error {
 public:
  using Error::Error;
};
class NoInverseError : public Error {
 public:
  using Error::Error;
};
class InvalidTupleError : public Error {
 public:
  using Error::Error;
};

// Plans.
class DuplicatePlanError : public Error {
 public:
  using Error::Error;
};
class EmptyPlanError : public Error {
 public:
  using Error::Error;
};
class UnknownPlanError : public Error {
 public:
  using Error::Error;
};
class InvalidPlanError : public Error {
 public:
  using Error::Error;
};

// Ingestion.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ManifestError : public Error {
 public:
  ManifestError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Inference.
class MissingQualityError : public Error {
 public:
  using Error::Error;
};
class NonNumericValueError : public Error {
 public:
  using Error::Error;
};
class NoComparedQualitiesError : public Error {
 public:
  using Error::Error;
};

// Narration and metrics.
class UnknownEntityError : public Error {
 public:
  using Error::Error;
};
class EmptyTextError : public Error {
 public:
  using Error::Error;
};

}  // namespace plancomp
