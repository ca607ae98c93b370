#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcs {

enum class ErrorCode {
  MalformedHeader,
  MalformedLine,
  EdgeOutOfRange,
  SelfLoop,
  DuplicateEdge,
  FrameIndexOutOfRange,
  EmptySolution,
  KOrderOutOfRange,
  BudgetExceeded,
  InfeasibleFrame,
  Uncoverable,
  DomainMismatch,
  NoSuperedges,
  CompleteGraph,
  NotUniform,
  EdgeNotInUnion,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors additionally name the 1-based line of the offending input.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dcs
