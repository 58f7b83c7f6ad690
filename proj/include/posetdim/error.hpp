#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetdim {

enum class ErrorKind {
  DuplicateId,
  UnknownId,
  CycleDetected,
  DomainMismatch,
  InconsistentPartial,
  OverlappingDomains,
  PartsOverlap,
  EmptyPart,
  BackwardRelation,
  IntraPartRelation,
  IndexOutOfRange,
  NotStrictlyOrdered,
  SingleLevel,
  EmptyPoset,
  CapExceeded,
  SearchLimit,
  NotARealizer,
  NotABipartiteRealizer,
  TooSmall,
  BadMatching,
  BadParameters,
  ParseError,
  MissingParts,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this type; `kind()` is the
// stable discriminator, `what()` carries the human-readable detail.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace posetdim
