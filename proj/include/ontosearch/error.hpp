#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ontosearch {

enum class ErrorCode {
  // document parsing
  MalformedXml,
  UnknownConstruct,
  MissingId,
  BadReference,
  // knowledge base assembly
  CycleError,
  UndefinedReference,
  DuplicateId,
  DomainViolation,
  MultipleParents,
  // lookups
  UnknownInstance,
  UnknownClass,
  UnknownProperty,
  // synonym tables
  UnknownCanonical,
  ConflictingSynonym,
  InvalidSynonym,
  // query resolution
  MalformedQuery,
  NoRelation,
  EmptyResult,
  // cost model arguments
  DomainError,
  // filesystem / configuration
  IoError,
};

/// Stable snake_case identifier, used as `error.code` in JSON bodies.
std::string_view code_name(ErrorCode code);

/// Human-readable form of the code ("no relation", "cycle error", ...).
std::string_view code_label(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

struct Issue {
  ErrorCode code;
  std::string message;

  friend bool operator==(const Issue&, const Issue&) = default;
};

/// Raised by KnowledgeBase::build with every problem found, not just the first.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<Issue> issues);

  const std::vector<Issue>& issues() const noexcept { return issues_; }

private:
  std::vector<Issue> issues_;
};

}  // namespace ontosearch
