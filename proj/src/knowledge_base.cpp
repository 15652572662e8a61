#include "ontosearch/knowledge_base.hpp"

#include <algorithm>
#include <set>

#include "ontosearch/error.hpp"

namespace ontosearch {

namespace {

std::string where(const SourceSpan& s) {
  return s.doc_id.empty() ? std::string("<input>") : s.doc_id + ":" + std::to_string(s.first_line);
}

// Equal names may differ in spelling; keep the byte-wise smallest so the
// result does not depend on declaration order.
void keep_smallest_spelling(Name& current, const Name& candidate) {
  if (candidate.text() < current.text()) current = candidate;
}

std::vector<Name> sorted_unique(std::vector<Name> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

class Builder {
public:
  KnowledgeBase::Parts run(std::span<const Declaration> decls) {
    for (const Declaration& d : decls) {
      std::visit([&](const auto& body) { collect(body, d.source); }, d.body);
    }
    check_name_clashes();
    resolve_links();
    check_cycles();
    resolve_properties();
    resolve_instances();

    std::sort(issues_.begin(), issues_.end(), [](const Issue& a, const Issue& b) {
      return std::tie(a.code, a.message) < std::tie(b.code, b.message);
    });
    issues_.erase(std::unique(issues_.begin(), issues_.end()), issues_.end());
    if (!issues_.empty()) throw ValidationError(std::move(issues_));

    for (auto& [name, node] : parts_.classes) {
      if (node.parent) {
        parts_.classes.at(*node.parent).children.push_back(node.name);
      } else {
        parts_.roots.push_back(node.name);
      }
    }
    for (auto& [name, node] : parts_.classes) {
      std::sort(node.children.begin(), node.children.end());
      std::sort(node.instances.begin(), node.instances.end());
    }
    return std::move(parts_);
  }

private:
  struct PendingProperty {
    PropertyDecl decl;
    SourceSpan source;
  };
  struct PendingInstance {
    InstanceDecl decl;
    SourceSpan source;
  };
  struct PendingLink {
    SubclassLink link;
    SourceSpan source;
  };

  void report(ErrorCode code, std::string message) { issues_.push_back({code, std::move(message)}); }

  void collect(const ClassDecl& c, const SourceSpan&) {
    auto [it, inserted] = parts_.classes.try_emplace(c.name, ClassNode{c.name, {}, {}, {}});
    if (!inserted) keep_smallest_spelling(it->second.name, c.name);
  }

  void collect(const SubclassLink& l, const SourceSpan& s) { links_.push_back({l, s}); }

  void collect(const PropertyDecl& p, const SourceSpan& s) {
    PropertyDecl normalized{p.name, sorted_unique(p.domains), sorted_unique(p.ranges)};
    auto [it, inserted] = properties_.try_emplace(p.name, PendingProperty{normalized, s});
    if (inserted) return;
    PropertyDecl& existing = it->second.decl;
    if (existing.domains == normalized.domains && existing.ranges == normalized.ranges) {
      keep_smallest_spelling(existing.name, p.name);
      return;
    }
    // Conflicting redeclaration: report the pair in a stable order.
    auto first = std::min(where(it->second.source), where(s));
    auto second = std::max(where(it->second.source), where(s));
    report(ErrorCode::DuplicateId, "property '" + p.name.text() +
                                       "' declared with different domains/ranges at " + first +
                                       " and " + second);
  }

  void collect(const InstanceDecl& i, const SourceSpan& s) {
    auto [it, inserted] = instances_.try_emplace(i.id, PendingInstance{i, s});
    if (inserted) return;
    auto first = std::min(where(it->second.source), where(s));
    auto second = std::max(where(it->second.source), where(s));
    report(ErrorCode::DuplicateId,
           "instance '" + i.id.text() + "' declared twice, at " + first + " and " + second);
  }

  void check_name_clashes() {
    for (const auto& [name, node] : parts_.classes) {
      if (properties_.contains(name)) {
        report(ErrorCode::DuplicateId, "'" + name.text() + "' names both a class and a property");
      }
      if (instances_.contains(name)) {
        report(ErrorCode::DuplicateId, "'" + name.text() + "' names both a class and an instance");
      }
    }
    for (const auto& [name, p] : properties_) {
      if (instances_.contains(name)) {
        report(ErrorCode::DuplicateId,
               "'" + name.text() + "' names both a property and an instance");
      }
    }
  }

  const Name* canonical_class(const Name& n) const {
    auto it = parts_.classes.find(n);
    return it == parts_.classes.end() ? nullptr : &it->second.name;
  }

  void resolve_links() {
    std::map<Name, std::set<Name>> parents;
    for (const PendingLink& l : links_) {
      bool ok = true;
      for (const Name* n : {&l.link.child, &l.link.parent}) {
        if (!canonical_class(*n)) {
          report(ErrorCode::UndefinedReference, "subclass link " + l.link.child.text() + " -> " +
                                                    l.link.parent.text() + " at " +
                                                    where(l.source) + " names undeclared class '" +
                                                    n->text() + "'");
          ok = false;
        }
      }
      if (ok) parents[l.link.child].insert(l.link.parent);
    }
    for (const auto& [child, ps] : parents) {
      if (ps.size() > 1) {
        std::string list;
        for (const Name& p : ps) list += (list.empty() ? "" : ", ") + canonical_class(p)->text();
        report(ErrorCode::MultipleParents,
               "class '" + canonical_class(child)->text() + "' has several parents: " + list);
      }
      parts_.classes.at(child).parent = *canonical_class(*ps.begin());
    }
  }

  void check_cycles() {
    std::set<Name> done;
    for (const auto& [start, node] : parts_.classes) {
      std::vector<Name> path;
      std::optional<Name> cur = start;
      while (cur && !done.contains(*cur)) {
        auto seen = std::find(path.begin(), path.end(), *cur);
        if (seen != path.end()) {
          report_cycle(std::vector<Name>(seen, path.end()));
          break;
        }
        path.push_back(*cur);
        cur = parts_.classes.at(*cur).parent;
      }
      done.insert(path.begin(), path.end());
    }
    has_cycle_ = std::any_of(issues_.begin(), issues_.end(),
                             [](const Issue& i) { return i.code == ErrorCode::CycleError; });
  }

  void report_cycle(std::vector<Name> cycle) {
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    std::string text;
    for (const Name& n : cycle) text += canonical_class(n)->text() + " -> ";
    text += canonical_class(cycle.front())->text();
    report(ErrorCode::CycleError, "subclass cycle " + text);
  }

  void resolve_properties() {
    for (auto& [key, pending] : properties_) {
      PropertyDecl& p = pending.decl;
      auto canonicalize = [&](std::vector<Name>& names, const char* role) {
        for (Name& n : names) {
          if (const Name* c = canonical_class(n)) {
            n = *c;
          } else {
            report(ErrorCode::UndefinedReference, "property '" + p.name.text() + "' at " +
                                                      where(pending.source) + " has " + role +
                                                      " '" + n.text() + "' which is not a class");
          }
        }
      };
      canonicalize(p.domains, "domain");
      canonicalize(p.ranges, "range");
      parts_.properties.emplace(key, PropertyDef{p.name, p.domains, p.ranges});
    }
  }

  bool within(const Name& cls, const Name& ancestor) const {
    if (has_cycle_) return false;
    std::optional<Name> cur = cls;
    while (cur) {
      if (*cur == ancestor) return true;
      cur = parts_.classes.at(*cur).parent;
    }
    return false;
  }

  void resolve_instances() {
    for (auto& [key, pending] : instances_) {
      InstanceDecl& inst = pending.decl;
      const std::string at = "instance '" + inst.id.text() + "' at " + where(pending.source);
      const Name* cls = canonical_class(inst.class_name);
      if (!cls) {
        report(ErrorCode::UndefinedReference,
               at + " has undeclared class '" + inst.class_name.text() + "'");
      }
      for (Assertion& a : inst.assertions) {
        auto pit = parts_.properties.find(a.property);
        if (pit == parts_.properties.end()) {
          report(ErrorCode::UndefinedReference,
                 at + " asserts undeclared property '" + a.property.text() + "'");
          continue;
        }
        const PropertyDef& prop = pit->second;
        a.property = prop.name;
        if (auto* ref = std::get_if<ResourceRef>(&a.value)) {
          auto target = instances_.find(ref->target);
          if (target == instances_.end()) {
            report(ErrorCode::UndefinedReference, at + " references unknown instance '" +
                                                      ref->target.text() + "' via " +
                                                      prop.name.text());
          } else {
            ref->target = target->second.decl.id;
          }
        }
        if (cls && !prop.domains.empty() && !has_cycle_) {
          bool allowed = std::any_of(prop.domains.begin(), prop.domains.end(),
                                     [&](const Name& d) { return within(*cls, d); });
          if (!allowed) {
            report(ErrorCode::DomainViolation, at + " of class '" + cls->text() +
                                                   "' asserts '" + prop.name.text() +
                                                   "' whose domain does not cover that class");
          }
        }
      }
      if (cls) {
        inst.class_name = *cls;
        parts_.classes.at(*cls).instances.push_back(inst.id);
      }
      parts_.instances.emplace(key, InstanceRecord{inst.id, inst.class_name, inst.assertions});
    }
  }

  KnowledgeBase::Parts parts_;
  std::map<Name, PendingProperty> properties_;
  std::map<Name, PendingInstance> instances_;
  std::vector<PendingLink> links_;
  std::vector<Issue> issues_;
  bool has_cycle_ = false;
};

}  // namespace

KnowledgeBase KnowledgeBase::build(std::span<const Declaration> decls,
                                   std::optional<std::size_t> doc_count) {
  KnowledgeBase kb;
  Parts parts = Builder().run(decls);
  kb.classes_ = std::move(parts.classes);
  kb.properties_ = std::move(parts.properties);
  kb.instances_ = std::move(parts.instances);
  kb.roots_ = std::move(parts.roots);
  if (doc_count) {
    kb.doc_count_ = *doc_count;
  } else {
    std::set<std::string> docs;
    for (const Declaration& d : decls) docs.insert(d.source.doc_id);
    kb.doc_count_ = docs.size();
  }
  return kb;
}

const ClassNode* KnowledgeBase::find_class(const Name& name) const {
  auto it = classes_.find(name);
  return it == classes_.end() ? nullptr : &it->second;
}

const PropertyDef* KnowledgeBase::find_property(const Name& name) const {
  auto it = properties_.find(name);
  return it == properties_.end() ? nullptr : &it->second;
}

const InstanceRecord* KnowledgeBase::find_instance(const Name& name) const {
  auto it = instances_.find(name);
  return it == instances_.end() ? nullptr : &it->second;
}

const ClassNode& KnowledgeBase::class_node(const Name& name) const {
  if (const ClassNode* c = find_class(name)) return *c;
  throw Error(ErrorCode::UnknownClass, "unknown class '" + name.text() + "'");
}

const PropertyDef& KnowledgeBase::property(const Name& name) const {
  if (const PropertyDef* p = find_property(name)) return *p;
  throw Error(ErrorCode::UnknownProperty, "unknown property '" + name.text() + "'");
}

const InstanceRecord& KnowledgeBase::instance(const Name& name) const {
  if (const InstanceRecord* i = find_instance(name)) return *i;
  throw Error(ErrorCode::UnknownInstance, "unknown instance '" + name.text() + "'");
}

const Name& class_of(const KnowledgeBase& kb, const Name& instance) {
  return kb.instance(instance).class_name;
}

std::vector<Name> ancestors(const KnowledgeBase& kb, const Name& cls) {
  std::vector<Name> chain;
  const ClassNode* node = &kb.class_node(cls);
  while (true) {
    chain.push_back(node->name);
    if (!node->parent) break;
    node = &kb.class_node(*node->parent);
  }
  return chain;
}

namespace {

void collect_subtree(const KnowledgeBase& kb, const ClassNode& node, std::vector<Name>& out) {
  out.insert(out.end(), node.instances.begin(), node.instances.end());
  for (const Name& child : node.children) collect_subtree(kb, kb.class_node(child), out);
}

}  // namespace

std::vector<Name> subtree_instances(const KnowledgeBase& kb, const Name& cls) {
  std::vector<Name> out;
  collect_subtree(kb, kb.class_node(cls), out);
  return out;
}

bool is_subclass_of(const KnowledgeBase& kb, const Name& cls, const Name& ancestor) {
  const ClassNode* node = &kb.class_node(cls);
  while (true) {
    if (node->name == ancestor) return true;
    if (!node->parent) return false;
    node = &kb.class_node(*node->parent);
  }
}

std::vector<Value> value_of(const KnowledgeBase& kb, const Name& instance, const Name& property) {
  const InstanceRecord& rec = kb.instance(instance);
  kb.property(property);
  std::vector<Value> out;
  for (const Assertion& a : rec.assertions) {
    if (a.property == property) out.push_back(a.value);
  }
  return out;
}

std::optional<PropertyMatch> find_property(const KnowledgeBase& kb,
                                           std::span<const Name> domain_chain,
                                           std::span<const Name> range_chain) {
  if (domain_chain.empty() || range_chain.empty()) return std::nullopt;
  const std::size_t max_sum = domain_chain.size() + range_chain.size() - 2;
  for (std::size_t sum = 0; sum <= max_sum; ++sum) {
    const std::size_t lo = sum >= range_chain.size() ? sum - range_chain.size() + 1 : 0;
    const std::size_t hi = std::min(sum, domain_chain.size() - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
      const std::size_t j = sum - i;
      PropertyMatch match{{}, i, j};
      for (const auto& [name, prop] : kb.properties()) {
        if (std::binary_search(prop.domains.begin(), prop.domains.end(), domain_chain[i]) &&
            std::binary_search(prop.ranges.begin(), prop.ranges.end(), range_chain[j])) {
          match.properties.push_back(prop);
        }
      }
      if (!match.properties.empty()) return match;
    }
  }
  return std::nullopt;
}

}  // namespace ontosearch
