#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ontosearch/name.hpp"

namespace ontosearch {

/// Where a declaration came from. Lines are 1-based and inclusive; offsets are
/// byte positions into the document text, [begin_offset, end_offset).
struct SourceSpan {
  std::string doc_id;
  std::size_t first_line = 0;
  std::size_t last_line = 0;
  std::size_t begin_offset = 0;
  std::size_t end_offset = 0;
};

struct Literal {
  std::string text;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct ResourceRef {
  Name target;
  friend bool operator==(const ResourceRef&, const ResourceRef&) = default;
};

using Value = std::variant<Literal, ResourceRef>;

/// Literal text or the referenced name.
const std::string& value_text(const Value& value);

struct Assertion {
  Name property;
  Value value;
  friend bool operator==(const Assertion&, const Assertion&) = default;
};

struct ClassDecl {
  Name name;
  friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

struct SubclassLink {
  Name child;
  Name parent;
  friend bool operator==(const SubclassLink&, const SubclassLink&) = default;
};

struct PropertyDecl {
  Name name;
  std::vector<Name> domains;
  std::vector<Name> ranges;
  friend bool operator==(const PropertyDecl&, const PropertyDecl&) = default;
};

struct InstanceDecl {
  Name id;
  Name class_name;
  std::vector<Assertion> assertions;
  friend bool operator==(const InstanceDecl&, const InstanceDecl&) = default;
};

using DeclarationBody = std::variant<ClassDecl, SubclassLink, PropertyDecl, InstanceDecl>;

struct Declaration {
  DeclarationBody body;
  SourceSpan source;
};

/// Structural equality: compares bodies, ignores source spans.
bool same_structure(const std::vector<Declaration>& a, const std::vector<Declaration>& b);

}  // namespace ontosearch
