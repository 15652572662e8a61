#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "ontosearch/query_engine.hpp"
#include "ontosearch/rdf_parser.hpp"

namespace ontosearch::testing {

inline const std::filesystem::path kFixtureDir = ONTOSEARCH_FIXTURE_DIR;

// The knowledge-base snippets from the crops example, with line-wrapped
// namespace URIs rejoined and elided lines dropped.
inline const std::string kPotatoSnippet = R"(<?xml version="1.0"?>
<vegetable rdf:ID="potato"
xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
xmlns="http://www.westbengal.org/crops#">
<soilreq>KR256</soilreq>
</vegetable>
)";

inline const std::string kSchemaSnippet = R"(<?xml version="1.0"?>
<rdf:RDF
xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
xml:base="http://www.westbengal.org/crops#">
<rdfs:Class rdf:ID="Vegetable">
<rdfs:subClassOf
rdf:resource="#Crops"/>
</rdfs:Class>
<rdfs:Class rdf:ID="Fruits">
<rdfs:subClassOf
rdf:resource="#Crops"/>
</rdfs:Class>
</rdf:RDF>
)";

// The bare rdf:Property element, wrapped in a schema document.
inline const std::string kPropertySnippet = R"(<?xml version="1.0"?>
<rdf:RDF
xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#">
<rdf:Property
rdf:ID="seasonreqd">
<rdfs:domain
rdf:resource="#Vegetable"/>
<rdfs:range
rdf:resource="#season"/>
</rdf:Property>
</rdf:RDF>
)";

inline const std::string kEmptySchema =
    R"(<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"/>)";

inline std::string schema_doc(const std::string& body) {
  return "<?xml version=\"1.0\"?>\n<rdf:RDF\n"
         "  xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n"
         "  xmlns:rdfs=\"http://www.w3.org/2000/01/rdf-schema#\">\n" +
         body + "</rdf:RDF>\n";
}

inline std::string instance_doc(const std::string& cls, const std::string& id,
                                const std::string& body) {
  return "<" + cls + " rdf:ID=\"" + id +
         "\" xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\">\n" + body + "</" + cls +
         ">\n";
}

inline const SearchIndex& fixture_index() {
  static const SearchIndex index = load_search_index(kFixtureDir);
  return index;
}

inline Name N(const char* s) { return Name(s); }

inline std::vector<Name> names(std::initializer_list<const char*> list) {
  std::vector<Name> out;
  for (const char* s : list) out.emplace_back(s);
  return out;
}

inline std::vector<std::string> texts(const std::vector<Name>& ns) {
  std::vector<std::string> out;
  for (const Name& n : ns) out.push_back(n.text());
  return out;
}

/// Random valid name for generators.
inline std::string random_name(std::mt19937& rng, const std::string& prefix) {
  static constexpr char kChars[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-";
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<int> pick(0, sizeof(kChars) - 2);
  std::string out = prefix;
  for (int i = len(rng); i > 0; --i) out += kChars[pick(rng)];
  return out;
}

/// Random ontology for lift checks: a class tree under c0.., one dedicated
/// range class per property (so no other property can match its chains), and
/// instances asserting every property whose domain covers their class.
inline std::vector<Declaration> random_lift_kb(std::mt19937& rng) {
  std::uniform_int_distribution<int> class_count(2, 9), prop_count(1, 4), inst_count(1, 10);
  const int classes = class_count(rng);
  const int props = prop_count(rng);
  std::vector<int> parent(classes, -1);
  std::string schema;
  for (int c = 0; c < classes; ++c) {
    schema += "<rdfs:Class rdf:ID=\"c" + std::to_string(c) + "\">";
    if (c > 0) {
      parent[c] = static_cast<int>(rng() % c);
      schema += "<rdfs:subClassOf rdf:resource=\"#c" + std::to_string(parent[c]) + "\"/>";
    }
    schema += "</rdfs:Class>\n";
  }
  std::vector<int> domain(props);
  for (int p = 0; p < props; ++p) {
    domain[p] = static_cast<int>(rng() % classes);
    const std::string id = std::to_string(p);
    schema += "<rdfs:Class rdf:ID=\"range" + id + "\"/>\n<rdf:Property rdf:ID=\"p" + id +
              "\"><rdfs:domain rdf:resource=\"#c" + std::to_string(domain[p]) +
              "\"/><rdfs:range rdf:resource=\"#range" + id + "\"/></rdf:Property>\n";
  }
  std::vector<Declaration> decls = parse_document(schema_doc(schema), "schema.rdf");

  auto covers = [&](int ancestor, int c) {
    for (; c != -1; c = parent[c]) {
      if (c == ancestor) return true;
    }
    return false;
  };
  for (int i = inst_count(rng); i > 0; --i) {
    const int c = static_cast<int>(rng() % classes);
    std::string body;
    for (int p = 0; p < props; ++p) {
      if (!covers(domain[p], c)) continue;
      for (int k = static_cast<int>(rng() % 3); k > 0; --k) {
        body += "<p" + std::to_string(p) + ">v" + std::to_string(rng() % 100) + "</p" +
                std::to_string(p) + ">";
      }
    }
    auto more = parse_document(instance_doc("c" + std::to_string(c), "i" + std::to_string(i), body),
                               "i.rdf");
    decls.insert(decls.end(), more.begin(), more.end());
  }
  return decls;
}

}  // namespace ontosearch::testing
