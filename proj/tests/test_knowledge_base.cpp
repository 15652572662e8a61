#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ontosearch/error.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace ontosearch;
using namespace ontosearch::testing;

namespace {

const KnowledgeBase& fixture() { return fixture_index().kb; }

std::vector<Declaration> decls_of(const std::string& text) { return parse_document(text, "t.rdf"); }

std::vector<Issue> build_issues(const std::vector<Declaration>& decls) {
  try {
    KnowledgeBase::build(decls);
  } catch (const ValidationError& e) {
    return e.issues();
  }
  FAIL("expected validation failure");
  return {};
}

bool has_issue(const std::vector<Issue>& issues, ErrorCode code, const std::string& fragment) {
  return std::any_of(issues.begin(), issues.end(), [&](const Issue& i) {
    return i.code == code && i.message.find(fragment) != std::string::npos;
  });
}

ErrorCode lookup_error(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a lookup error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("crops snippets assemble into a knowledge base") {
  std::vector<Declaration> decls;
  for (const std::string& text :
       {kSchemaSnippet, kPotatoSnippet, kPropertySnippet,
        schema_doc(R"(<rdfs:Class rdf:ID="Crops"/>
<rdfs:Class rdf:ID="season"/>
<rdfs:Class rdf:ID="Soil"/>
<rdf:Property rdf:ID="soilreq"><rdfs:domain rdf:resource="#Vegetable"/><rdfs:range rdf:resource="#Soil"/></rdf:Property>
)")}) {
    auto d = decls_of(text);
    decls.insert(decls.end(), d.begin(), d.end());
  }
  auto kb = KnowledgeBase::build(decls);
  for (const char* c : {"Crops", "Vegetable", "Fruits", "season", "Soil"}) {
    CHECK(kb.find_class(N(c)) != nullptr);
  }
  CHECK(kb.find_property(N("seasonreqd")) != nullptr);
  REQUIRE(kb.find_instance(N("potato")) != nullptr);
  // `vegetable` in the instance document resolves to the declared `Vegetable`.
  CHECK(class_of(kb, N("potato")).text() == "Vegetable");
  CHECK(texts(kb.roots()) == std::vector<std::string>{"Crops", "season", "Soil"});
}

TEST_CASE("empty input gives an empty knowledge base") {
  auto kb = KnowledgeBase::build(std::vector<Declaration>{});
  CHECK(kb.classes().empty());
  CHECK(kb.instances().empty());
  CHECK(kb.properties().empty());
  CHECK(kb.doc_count() == 0);
}

TEST_CASE("subclass cycle is reported with its path") {
  auto issues = build_issues(decls_of(schema_doc(R"(
<rdfs:Class rdf:ID="A"><rdfs:subClassOf rdf:resource="#B"/></rdfs:Class>
<rdfs:Class rdf:ID="B"><rdfs:subClassOf rdf:resource="#A"/></rdfs:Class>
)")));
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].code == ErrorCode::CycleError);
  CHECK(issues[0].message.find("A -> B -> A") != std::string::npos);
}

TEST_CASE("self loop is a cycle") {
  auto issues = build_issues(decls_of(
      schema_doc(R"(<rdfs:Class rdf:ID="A"><rdfs:subClassOf rdf:resource="#A"/></rdfs:Class>)")));
  CHECK(has_issue(issues, ErrorCode::CycleError, "A -> A"));
}

TEST_CASE("every validation problem is collected") {
  std::vector<Declaration> decls = decls_of(schema_doc(R"(
<rdfs:Class rdf:ID="Crops"/>
<rdfs:Class rdf:ID="Fruits"><rdfs:subClassOf rdf:resource="#Crops"/></rdfs:Class>
<rdfs:Class rdf:ID="Tools"/>
<rdfs:Class rdf:ID="Both">
  <rdfs:subClassOf rdf:resource="#Crops"/>
  <rdfs:subClassOf rdf:resource="#Tools"/>
</rdfs:Class>
<rdfs:Class rdf:ID="Orphan"><rdfs:subClassOf rdf:resource="#Missing"/></rdfs:Class>
<rdf:Property rdf:ID="grownin"><rdfs:domain rdf:resource="#Crops"/><rdfs:range rdf:resource="#Nowhere"/></rdf:Property>
<rdf:Property rdf:ID="Tools"/>
)"));
  for (const std::string& inst :
       {instance_doc("Fruits", "mango", "<grownin>Bengal</grownin><colour>yellow</colour>"),
        instance_doc("Fruits", "mango", ""), instance_doc("Tools", "spade", "<grownin>x</grownin>"),
        instance_doc("Ghost", "boo", ""), instance_doc("Fruits", "apple", "<grownin rdf:resource=\"#nobody\"/>")}) {
    auto d = decls_of(inst);
    decls.insert(decls.end(), d.begin(), d.end());
  }
  auto issues = build_issues(decls);
  CHECK(has_issue(issues, ErrorCode::MultipleParents, "Both"));
  CHECK(has_issue(issues, ErrorCode::UndefinedReference, "Missing"));
  CHECK(has_issue(issues, ErrorCode::UndefinedReference, "Nowhere"));
  CHECK(has_issue(issues, ErrorCode::UndefinedReference, "colour"));
  CHECK(has_issue(issues, ErrorCode::UndefinedReference, "Ghost"));
  CHECK(has_issue(issues, ErrorCode::UndefinedReference, "nobody"));
  CHECK(has_issue(issues, ErrorCode::DuplicateId, "mango"));
  CHECK(has_issue(issues, ErrorCode::DuplicateId, "class and a property"));
  CHECK(has_issue(issues, ErrorCode::DomainViolation, "spade"));
  CHECK(issues.size() == 9);
}

TEST_CASE("repeated declarations merge; conflicting ones do not") {
  auto decls = decls_of(schema_doc(R"(
<rdfs:Class rdf:ID="crops"/>
<rdfs:Class rdf:ID="Crops"/>
<rdfs:Class rdf:ID="Fruits"><rdfs:subClassOf rdf:resource="#Crops"/></rdfs:Class>
<rdfs:Class rdf:ID="Fruits"><rdfs:subClassOf rdf:resource="#crops"/></rdfs:Class>
<rdf:Property rdf:ID="p"><rdfs:domain rdf:resource="#Fruits"/></rdf:Property>
<rdf:Property rdf:ID="p"><rdfs:domain rdf:resource="#fruits"/></rdf:Property>
)"));
  auto kb = KnowledgeBase::build(decls);
  CHECK(kb.classes().size() == 2);
  CHECK(kb.class_node(N("crops")).name.text() == "Crops");
  CHECK(ancestors(kb, N("Fruits")) == names({"Fruits", "Crops"}));

  auto conflicting = decls_of(schema_doc(R"(
<rdfs:Class rdf:ID="A"/><rdfs:Class rdf:ID="B"/>
<rdf:Property rdf:ID="p"><rdfs:domain rdf:resource="#A"/></rdf:Property>
<rdf:Property rdf:ID="p"><rdfs:domain rdf:resource="#B"/></rdf:Property>
)"));
  CHECK(has_issue(build_issues(conflicting), ErrorCode::DuplicateId, "property 'p'"));
}

TEST_CASE("class_of") {
  CHECK(class_of(fixture(), N("mango")) == N("Fruits"));
  CHECK(class_of(fixture(), N("potato")) == N("Vegetable"));
  CHECK(class_of(fixture(), N("K123")) == N("Fertilizer"));
  CHECK(lookup_error([] { class_of(fixture(), N("banana")); }) == ErrorCode::UnknownInstance);
}

TEST_CASE("ancestors") {
  CHECK(ancestors(fixture(), N("Vegetable")) == names({"Vegetable", "Crops"}));
  CHECK(ancestors(fixture(), N("Crops")) == names({"Crops"}));
  CHECK(ancestors(fixture(), N("Fruits")) == names({"Fruits", "Crops"}));
  CHECK(lookup_error([] { ancestors(fixture(), N("Bicycle")); }) == ErrorCode::UnknownClass);
}

TEST_CASE("property: ancestor chains are finite, duplicate-free and end at a root") {
  for (const auto& [name, node] : fixture().classes()) {
    auto chain = ancestors(fixture(), name);
    CHECK(chain.front() == name);
    CHECK(std::set<Name>(chain.begin(), chain.end()).size() == chain.size());
    CHECK_FALSE(fixture().class_node(chain.back()).parent.has_value());
    CHECK(chain == oracle::parent_walk(fixture(), name));
  }
}

TEST_CASE("subtree_instances") {
  auto crops = subtree_instances(fixture(), N("Crops"));
  CHECK(std::set<Name>(crops.begin(), crops.end()) ==
        std::set<Name>{N("mango"), N("rice"), N("potato")});
  // Subclasses in name order: Cereals, Fruits, Vegetable.
  CHECK(crops == names({"rice", "mango", "potato"}));
  CHECK(subtree_instances(fixture(), N("Cost")).empty());
  CHECK(subtree_instances(fixture(), N("Vegetable")) == names({"potato"}));
  CHECK(subtree_instances(fixture(), N("GeneralInfo")).size() == 8);
  CHECK(lookup_error([] { subtree_instances(fixture(), N("Nope")); }) == ErrorCode::UnknownClass);
}

TEST_CASE("property: subtree equals direct instances plus the children's subtrees") {
  const KnowledgeBase& kb = fixture();
  for (const auto& [name, node] : kb.classes()) {
    std::multiset<Name> expected(node.instances.begin(), node.instances.end());
    for (const Name& child : node.children) {
      auto sub = subtree_instances(kb, child);
      expected.insert(sub.begin(), sub.end());
    }
    auto got = subtree_instances(kb, name);
    CHECK(std::multiset<Name>(got.begin(), got.end()) == expected);

    // Brute force: every instance whose parent walk passes through `name`.
    std::set<Name> brute;
    for (const auto& [id, rec] : kb.instances()) {
      if (oracle::below(kb, rec.class_name, name)) brute.insert(id);
    }
    CHECK(std::set<Name>(got.begin(), got.end()) == brute);
  }
}

TEST_CASE("value_of") {
  CHECK(value_of(fixture(), N("potato"), N("soilreq")) == std::vector<Value>{Literal{"KR256"}});
  CHECK(value_of(fixture(), N("mango"), N("fertilizerreqd")) ==
        std::vector<Value>{ResourceRef{N("K123")}});
  CHECK(value_of(fixture(), N("rice"), N("soldat")) ==
        std::vector<Value>{ResourceRef{N("Siliguri")}, ResourceRef{N("Malda")}});
  CHECK(lookup_error([] { value_of(fixture(), N("nobody"), N("soilreq")); }) ==
        ErrorCode::UnknownInstance);
  CHECK(lookup_error([] { value_of(fixture(), N("potato"), N("colour")); }) ==
        ErrorCode::UnknownProperty);

  std::vector<Declaration> minimal;
  for (const std::string& text :
       {kPotatoSnippet, kPropertySnippet,
        schema_doc(R"(<rdfs:Class rdf:ID="Vegetable"/><rdfs:Class rdf:ID="season"/>
<rdf:Property rdf:ID="soilreq"/>)")}) {
    auto d = decls_of(text);
    minimal.insert(minimal.end(), d.begin(), d.end());
  }
  auto kb = KnowledgeBase::build(minimal);
  CHECK(value_of(kb, N("potato"), N("seasonreqd")).empty());
}

TEST_CASE("find_property") {
  const KnowledgeBase& kb = fixture();
  auto season = find_property(kb, names({"Fruits", "Crops"}), names({"season"}));
  REQUIRE(season);
  REQUIRE(season->properties.size() == 1);
  CHECK(season->properties[0].name == N("seasonreqd"));
  CHECK(season->domain_level == 1);
  CHECK(season->range_level == 0);

  CHECK_FALSE(find_property(kb, names({"Fertilizer", "GeneralInfo"}), names({"Crops"})));

  auto empty = KnowledgeBase::build(decls_of(schema_doc("<rdfs:Class rdf:ID=\"A\"/>")));
  CHECK_FALSE(find_property(empty, names({"A"}), names({"A"})));
  CHECK_FALSE(find_property(kb, {}, names({"Crops"})));
}

TEST_CASE("find_property reports every property at the winning level pair") {
  auto kb = KnowledgeBase::build(decls_of(schema_doc(R"(
<rdfs:Class rdf:ID="Top"/>
<rdfs:Class rdf:ID="Mid"><rdfs:subClassOf rdf:resource="#Top"/></rdfs:Class>
<rdfs:Class rdf:ID="V"/>
<rdf:Property rdf:ID="zeta"><rdfs:domain rdf:resource="#Top"/><rdfs:range rdf:resource="#V"/></rdf:Property>
<rdf:Property rdf:ID="alpha"><rdfs:domain rdf:resource="#Top"/><rdfs:range rdf:resource="#V"/></rdf:Property>
)")));
  auto m = find_property(kb, ancestors(kb, N("Mid")), ancestors(kb, N("V")));
  REQUIRE(m);
  REQUIRE(m->properties.size() == 2);
  CHECK(m->properties[0].name == N("alpha"));
  CHECK(m->properties[1].name == N("zeta"));
  CHECK(m->levels_walked() == 1);
}

TEST_CASE("property: find_property agrees with a brute-force scan on every fixture class pair") {
  const KnowledgeBase& kb = fixture();
  int checked = 0;
  for (const auto& [d, dn] : kb.classes()) {
    for (const auto& [r, rn] : kb.classes()) {
      auto dc = ancestors(kb, d);
      auto rc = ancestors(kb, r);
      auto got = find_property(kb, dc, rc);
      auto want = oracle::find_property(kb, dc, rc);
      REQUIRE(got.has_value() == want.has_value());
      if (!got) continue;
      CHECK(got->domain_level == want->i);
      CHECK(got->range_level == want->j);
      std::set<Name> got_names;
      for (const auto& p : got->properties) got_names.insert(p.name);
      CHECK(got_names == want->properties);
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("property: find_property agrees with brute force on random ontologies") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nclasses(1, 12), nprops(0, 8);
    int count = nclasses(rng);
    std::string body;
    for (int c = 0; c < count; ++c) {
      body += "<rdfs:Class rdf:ID=\"c" + std::to_string(c) + "\">";
      if (c > 0 && rng() % 4 != 0) {
        body += "<rdfs:subClassOf rdf:resource=\"#c" + std::to_string(rng() % c) + "\"/>";
      }
      body += "</rdfs:Class>\n";
    }
    for (int p = nprops(rng); p > 0; --p) {
      body += "<rdf:Property rdf:ID=\"p" + std::to_string(p) + "\">";
      for (int k = static_cast<int>(rng() % 3); k > 0; --k) {
        body += "<rdfs:domain rdf:resource=\"#c" + std::to_string(rng() % count) + "\"/>";
      }
      for (int k = static_cast<int>(rng() % 3); k > 0; --k) {
        body += "<rdfs:range rdf:resource=\"#c" + std::to_string(rng() % count) + "\"/>";
      }
      body += "</rdf:Property>\n";
    }
    auto kb = KnowledgeBase::build(decls_of(schema_doc(body)));
    for (const auto& [d, dn] : kb.classes()) {
      for (const auto& [r, rn] : kb.classes()) {
        auto dc = ancestors(kb, d);
        auto rc = ancestors(kb, r);
        auto got = find_property(kb, dc, rc);
        auto want = oracle::find_property(kb, dc, rc);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
          REQUIRE(got->domain_level == want->i);
          REQUIRE(got->range_level == want->j);
          REQUIRE(got->properties.size() == want->properties.size());
        }
      }
    }
  }
}

TEST_CASE("property: build is independent of declaration order") {
  auto decls = read_kb_directory(kFixtureDir);
  const auto reference = KnowledgeBase::build(decls);
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    std::shuffle(decls.begin(), decls.end(), rng);
    CHECK(KnowledgeBase::build(decls) == reference);
  }
}

TEST_CASE("loading a directory") {
  auto kb = load_knowledge_base(kFixtureDir);
  CHECK(kb.doc_count() == 14);
  CHECK(kb.classes().size() == 10);
  CHECK(kb.properties().size() == 5);
  CHECK(kb.instances().size() == 11);
  CHECK(texts(kb.roots()) == std::vector<std::string>{"Crops", "GeneralInfo"});
  CHECK(lookup_error([] { load_knowledge_base(kFixtureDir / "missing"); }) == ErrorCode::IoError);
}
