#include "ontosearch/error.hpp"

namespace ontosearch {

namespace {

std::string summarize(const std::vector<Issue>& issues) {
  std::string out = std::to_string(issues.size()) + " validation error(s)";
  for (const Issue& issue : issues) {
    out += "\n  ";
    out += code_label(issue.code);
    out += ": ";
    out += issue.message;
  }
  return out;
}

ErrorCode first_code(const std::vector<Issue>& issues) {
  return issues.empty() ? ErrorCode::UndefinedReference : issues.front().code;
}

}  // namespace

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml: return "malformed_xml";
    case ErrorCode::UnknownConstruct: return "unknown_construct";
    case ErrorCode::MissingId: return "missing_id";
    case ErrorCode::BadReference: return "bad_reference";
    case ErrorCode::CycleError: return "cycle_error";
    case ErrorCode::UndefinedReference: return "undefined_reference";
    case ErrorCode::DuplicateId: return "duplicate_id";
    case ErrorCode::DomainViolation: return "domain_violation";
    case ErrorCode::MultipleParents: return "multiple_parents";
    case ErrorCode::UnknownInstance: return "unknown_instance";
    case ErrorCode::UnknownClass: return "unknown_class";
    case ErrorCode::UnknownProperty: return "unknown_property";
    case ErrorCode::UnknownCanonical: return "unknown_canonical";
    case ErrorCode::ConflictingSynonym: return "conflicting_synonym";
    case ErrorCode::InvalidSynonym: return "invalid_synonym";
    case ErrorCode::MalformedQuery: return "malformed_query";
    case ErrorCode::NoRelation: return "no_relation";
    case ErrorCode::EmptyResult: return "empty_result";
    case ErrorCode::DomainError: return "domain_error";
    case ErrorCode::IoError: return "io_error";
  }
  return "unknown";
}

std::string_view code_label(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml: return "malformed xml";
    case ErrorCode::UnknownConstruct: return "unknown construct";
    case ErrorCode::MissingId: return "missing id";
    case ErrorCode::BadReference: return "bad reference";
    case ErrorCode::CycleError: return "cycle error";
    case ErrorCode::UndefinedReference: return "undefined reference";
    case ErrorCode::DuplicateId: return "duplicate id";
    case ErrorCode::DomainViolation: return "domain violation";
    case ErrorCode::MultipleParents: return "multiple parents";
    case ErrorCode::UnknownInstance: return "unknown instance";
    case ErrorCode::UnknownClass: return "unknown class";
    case ErrorCode::UnknownProperty: return "unknown property";
    case ErrorCode::UnknownCanonical: return "unknown canonical";
    case ErrorCode::ConflictingSynonym: return "conflicting synonym";
    case ErrorCode::InvalidSynonym: return "invalid synonym";
    case ErrorCode::MalformedQuery: return "malformed query";
    case ErrorCode::NoRelation: return "no relation";
    case ErrorCode::EmptyResult: return "empty result";
    case ErrorCode::DomainError: return "domain error";
    case ErrorCode::IoError: return "io error";
  }
  return "unknown";
}

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(first_code(issues), summarize(issues)), issues_(std::move(issues)) {}

}  // namespace ontosearch
