#include "ontosearch/json_codec.hpp"

namespace ontosearch {

using nlohmann::json;

namespace {

json names_json(const std::vector<Name>& names) {
  json out = json::array();
  for (const Name& n : names) out.push_back(n.text());
  return out;
}

json class_tree(const KnowledgeBase& kb, const ClassNode& node) {
  json children = json::array();
  for (const Name& c : node.children) children.push_back(class_tree(kb, kb.class_node(c)));
  return {{"name", node.name.text()},
          {"parent", node.parent ? json(node.parent->text()) : json(nullptr)},
          {"instances", names_json(node.instances)},
          {"children", std::move(children)}};
}

}  // namespace

json value_json(const Value& value) {
  if (const auto* lit = std::get_if<Literal>(&value)) {
    return {{"kind", "literal"}, {"text", lit->text}};
  }
  return {{"kind", "resource"}, {"text", std::get<ResourceRef>(value).target.text()}};
}

json answer_json(std::string_view query, const Extraction& extraction, const Answer& answer) {
  json mentions = json::array();
  for (const Mention& m : extraction.mentions) {
    mentions.push_back({{"kind", std::string(kind_name(m.kind))},
                        {"name", m.name.text()},
                        {"span", {m.first_token, m.end_token}}});
  }
  json groups = json::array();
  for (const ResultGroup& g : answer.groups) {
    json values = json::array();
    for (const Value& v : g.results) values.push_back(value_json(v));
    groups.push_back({{"property", g.property.text()}, {"values", std::move(values)}});
  }
  const ExplanationTrace& t = answer.trace;
  return {
      {"query", std::string(query)},
      {"mentions", std::move(mentions)},
      {"mode", std::string(mode_name(answer.mode))},
      {"property", answer.property().text()},
      {"results", answer.result_texts()},
      {"groups", std::move(groups)},
      {"trace",
       {{"domain_chain_used", names_json(t.domain_chain_used)},
        {"range_chain_used", names_json(t.range_chain_used)},
        {"levels_walked", t.levels_walked},
        {"domain_level", t.domain_level},
        {"range_level", t.range_level},
        {"matched_domain", t.matched_domain.text()},
        {"matched_range", t.matched_range.text()}}},
  };
}

json error_json(std::string_view code, std::string_view message) {
  return {{"error", {{"code", std::string(code)}, {"message", std::string(message)}}}};
}

json error_json(const Error& error) { return error_json(code_name(error.code()), error.what()); }

json ontology_json(const KnowledgeBase& kb) {
  json roots = json::array();
  for (const Name& r : kb.roots()) roots.push_back(class_tree(kb, kb.class_node(r)));
  json properties = json::array();
  for (const auto& [name, p] : kb.properties()) {
    properties.push_back({{"name", p.name.text()},
                          {"domains", names_json(p.domains)},
                          {"ranges", names_json(p.ranges)}});
  }
  return {{"roots", std::move(roots)},
          {"properties", std::move(properties)},
          {"counts",
           {{"classes", kb.classes().size()},
            {"instances", kb.instances().size()},
            {"properties", kb.properties().size()},
            {"documents", kb.doc_count()}}}};
}

json instance_json(const KnowledgeBase& kb, const InstanceRecord& instance) {
  json assertions = json::array();
  for (const Assertion& a : instance.assertions) {
    assertions.push_back({{"property", a.property.text()}, {"value", value_json(a.value)}});
  }
  return {{"id", instance.id.text()},
          {"class", instance.class_name.text()},
          {"ancestors", names_json(ancestors(kb, instance.class_name))},
          {"assertions", std::move(assertions)}};
}

json class_instances_json(const KnowledgeBase& kb, const Name& cls) {
  const ClassNode& node = kb.class_node(cls);
  return {{"class", node.name.text()}, {"instances", names_json(subtree_instances(kb, cls))}};
}

json perf_json(double r, const std::vector<perf::CostRow<double>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({{"n", row.n},
                   {"best_case", row.best_case},
                   {"worst_case", row.worst_case},
                   {"keyword", row.keyword}});
  }
  return {{"r", r}, {"rows", std::move(out)}};
}

}  // namespace ontosearch
