#pragma once

#include <string_view>
#include <vector>

#include "ontosearch/declaration.hpp"

namespace ontosearch {

inline constexpr std::string_view kRdfNamespace = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfsNamespace = "http://www.w3.org/2000/01/rdf-schema#";

/// Parses one knowledge-base document written in the supported RDF/XML subset.
///
/// Two document shapes are accepted:
///
///   - a schema document rooted at `rdf:RDF`, holding `rdfs:Class` elements
///     (optionally with `rdfs:subClassOf rdf:resource="#Parent"` children) and
///     `rdf:Property` elements with any number of `rdfs:domain` / `rdfs:range`
///     children;
///   - an instance document whose root element is named after the class and
///     carries `rdf:ID`, with one child element per property holding either
///     literal text or an `rdf:resource="#Name"` reference.
///
/// Declarations come back in document order. A class element yields its
/// ClassDecl followed by one SubclassLink per `rdfs:subClassOf` child.
///
/// Throws Error with code MalformedXml, UnknownConstruct, MissingId or
/// BadReference; the message carries `doc_id:line`.
std::vector<Declaration> parse_document(std::string_view text, std::string_view doc_id);

/// Renders declarations back into the subset syntax so that parse_document
/// reproduces them. A single InstanceDecl becomes an instance document; any
/// mix of schema declarations becomes an `rdf:RDF` document. SubclassLinks must
/// directly follow the ClassDecl (or sibling links) of their child, which is
/// the shape parse_document produces; anything else throws std::invalid_argument.
std::string write_document(const std::vector<Declaration>& decls);

}  // namespace ontosearch
