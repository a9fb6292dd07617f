#ifndef DISTRACTOR_ERROR_H_
#define DISTRACTOR_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distractor {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document. Carries the 1-based line and the offending field
// when known.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t line = 0,
             std::string field = {});

  std::size_t line() const { return line_; }
  const std::string &field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// Well-formed input that violates a type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Answer contains nothing that can be substituted.
class NoTargetError : public Error {
 public:
  using Error::Error;
};

class RenderError : public Error {
 public:
  using Error::Error;
};

class PerturbError : public Error {
 public:
  using Error::Error;
};

class InsufficientCandidatesError : public Error {
 public:
  InsufficientCandidatesError(const std::string &message, std::size_t found)
      : Error(message), found_(found) {}

  std::size_t found() const { return found_; }

 private:
  std::size_t found_;
};

class OutOfVocabularyError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string &field, const std::string &message)
      : Error(field + ": " + message), field_(field) {}

  const std::string &field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace distractor

#endif  // DISTRACTOR_ERROR_H_
