#include "distractor/error.h"

#include <utility>

namespace distractor {
namespace {

std::string Decorate(const std::string &message, std::size_t line,
                     const std::string &field) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!field.empty()) out += "field '" + field + "': ";
  return out + message;
}

}  // namespace

ParseError::ParseError(const std::string &message, std::size_t line,
                       std::string field)
    : Error(Decorate(message, line, field)), line_(line), field_(std::move(field)) {}

}  // namespace distractor
