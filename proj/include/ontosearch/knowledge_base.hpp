#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ontosearch/declaration.hpp"

namespace ontosearch {

struct PropertyDef {
  Name name;
  std::vector<Name> domains;  // sorted, unique
  std::vector<Name> ranges;   // sorted, unique

  friend bool operator==(const PropertyDef&, const PropertyDef&) = default;
};

struct InstanceRecord {
  Name id;
  Name class_name;
  std::vector<Assertion> assertions;  // document order

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

struct ClassNode {
  Name name;
  std::optional<Name> parent;
  std::vector<Name> children;   // sorted
  std::vector<Name> instances;  // direct instances, sorted

  friend bool operator==(const ClassNode&, const ClassNode&) = default;
};

/// Validated, immutable ontology: a forest of classes, the property table and
/// the instance table. All orderings are by case-insensitive name.
class KnowledgeBase {
public:
  struct Parts {
    std::map<Name, ClassNode> classes;
    std::map<Name, PropertyDef> properties;
    std::map<Name, InstanceRecord> instances;
    std::vector<Name> roots;
  };

  /// Assembles declarations, collecting every problem before failing.
  ///
  /// Repeated identical class, property and subclass declarations are merged.
  /// Throws ValidationError listing all CycleError, UndefinedReference,
  /// DuplicateId, MultipleParents and DomainViolation issues. `doc_count`
  /// defaults to the number of distinct source documents among `decls`.
  static KnowledgeBase build(std::span<const Declaration> decls,
                             std::optional<std::size_t> doc_count = std::nullopt);

  const std::map<Name, ClassNode>& classes() const noexcept { return classes_; }
  const std::map<Name, PropertyDef>& properties() const noexcept { return properties_; }
  const std::map<Name, InstanceRecord>& instances() const noexcept { return instances_; }
  const std::vector<Name>& roots() const noexcept { return roots_; }
  std::size_t doc_count() const noexcept { return doc_count_; }

  const ClassNode* find_class(const Name& name) const;
  const PropertyDef* find_property(const Name& name) const;
  const InstanceRecord* find_instance(const Name& name) const;

  /// Throw Error(UnknownClass / UnknownProperty / UnknownInstance).
  const ClassNode& class_node(const Name& name) const;
  const PropertyDef& property(const Name& name) const;
  const InstanceRecord& instance(const Name& name) const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;

private:
  std::map<Name, ClassNode> classes_;
  std::map<Name, PropertyDef> properties_;
  std::map<Name, InstanceRecord> instances_;
  std::vector<Name> roots_;
  std::size_t doc_count_ = 0;
};

/// Declared class of an instance. Throws UnknownInstance.
const Name& class_of(const KnowledgeBase& kb, const Name& instance);

/// [cls, parent, grandparent, ..., root]. Throws UnknownClass.
std::vector<Name> ancestors(const KnowledgeBase& kb, const Name& cls);

/// Instances of `cls` and all its transitive subclasses: the class's own
/// instances first, then each subclass depth-first, everything sorted by name.
/// Throws UnknownClass.
std::vector<Name> subtree_instances(const KnowledgeBase& kb, const Name& cls);

/// True when `cls` equals `ancestor` or lies below it.
bool is_subclass_of(const KnowledgeBase& kb, const Name& cls, const Name& ancestor);

/// Every asserted value of `property` on `instance`, in assertion order.
/// Throws UnknownInstance or UnknownProperty.
std::vector<Value> value_of(const KnowledgeBase& kb, const Name& instance, const Name& property);

struct PropertyMatch {
  std::vector<PropertyDef> properties;  // every match at this level pair, by name
  std::size_t domain_level = 0;
  std::size_t range_level = 0;

  std::size_t levels_walked() const noexcept { return domain_level + range_level; }
};

/// Relation lookup between two ancestor chains.
///
/// Level pairs (i, j) are visited in increasing order of i + j and, within the
/// same sum, increasing i. The first pair for which some property lists
/// domain_chain[i] among its domains and range_chain[j] among its ranges wins;
/// all properties matching at that pair are returned.
std::optional<PropertyMatch> find_property(const KnowledgeBase& kb,
                                           std::span<const Name> domain_chain,
                                           std::span<const Name> range_chain);

/// Reads every `*.rdf` file directly under `dir` in sorted path order.
/// Parse failures propagate as Error; `doc_id` of each file is its filename.
std::vector<Declaration> read_kb_directory(const std::filesystem::path& dir);

/// read_kb_directory + KnowledgeBase::build, with doc_count = number of files.
KnowledgeBase load_knowledge_base(const std::filesystem::path& dir);

}  // namespace ontosearch
