// Domain error hierarchy. Every error carries a stable name that the CLI
// prints verbatim, so scripts can match on it.
#pragma once

#include <stdexcept>
#include <string>

namespace bbpmcs {

class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define BBPMCS_DEFINE_ERROR(Name)                              \
  class Name : public DomainError {                            \
   public:                                                     \
    explicit Name(const std::string& message)                  \
        : DomainError(#Name, message) {}                       \
  }

BBPMCS_DEFINE_ERROR(DuplicateVertex);
BBPMCS_DEFINE_ERROR(DuplicateEdge);
BBPMCS_DEFINE_ERROR(DanglingEdge);
BBPMCS_DEFINE_ERROR(SelfLoop);
BBPMCS_DEFINE_ERROR(UnknownLabel);
BBPMCS_DEFINE_ERROR(NotATree);
BBPMCS_DEFINE_ERROR(NotOuterplanar);
BBPMCS_DEFINE_ERROR(BlockTooLarge);
BBPMCS_DEFINE_ERROR(Disconnected);
BBPMCS_DEFINE_ERROR(TooLarge);
BBPMCS_DEFINE_ERROR(IndexOutOfRange);
BBPMCS_DEFINE_ERROR(CorpusTooLarge);

#undef BBPMCS_DEFINE_ERROR

/// Parse failures carry the 1-based line number of the offending line.
class ParseError : public DomainError {
 public:
  ParseError(int line, const std::string& message)
      : DomainError("ParseError",
                    "line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace bbpmcs
