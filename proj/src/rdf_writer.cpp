#include <sstream>
#include <stdexcept>

#include "ontosearch/rdf_parser.hpp"

namespace ontosearch {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void write_instance(std::ostream& os, const InstanceDecl& inst) {
  os << "<?xml version=\"1.0\"?>\n"
     << "<" << inst.class_name.text() << " rdf:ID=\"" << inst.id.text() << "\"\n"
     << "  xmlns:rdf=\"" << kRdfNamespace << "\"";
  if (inst.assertions.empty()) {
    os << "/>\n";
    return;
  }
  os << ">\n";
  for (const Assertion& a : inst.assertions) {
    const std::string& prop = a.property.text();
    if (const auto* ref = std::get_if<ResourceRef>(&a.value)) {
      os << "  <" << prop << " rdf:resource=\"#" << ref->target.text() << "\"/>\n";
    } else {
      os << "  <" << prop << ">" << escape(std::get<Literal>(a.value).text) << "</" << prop
         << ">\n";
    }
  }
  os << "</" << inst.class_name.text() << ">\n";
}

}  // namespace

std::string write_document(const std::vector<Declaration>& decls) {
  std::ostringstream os;
  if (decls.size() == 1 && std::holds_alternative<InstanceDecl>(decls.front().body)) {
    write_instance(os, std::get<InstanceDecl>(decls.front().body));
    return os.str();
  }

  os << "<?xml version=\"1.0\"?>\n"
     << "<rdf:RDF\n"
     << "  xmlns:rdf=\"" << kRdfNamespace << "\"\n"
     << "  xmlns:rdfs=\"" << kRdfsNamespace << "\">\n";

  for (std::size_t i = 0; i < decls.size(); ++i) {
    const DeclarationBody& body = decls[i].body;
    if (const auto* cls = std::get_if<ClassDecl>(&body)) {
      os << "  <rdfs:Class rdf:ID=\"" << cls->name.text() << "\"";
      bool has_links = false;
      while (i + 1 < decls.size()) {
        const auto* link = std::get_if<SubclassLink>(&decls[i + 1].body);
        if (link == nullptr || !(link->child == cls->name)) break;
        if (!has_links) os << ">\n";
        has_links = true;
        os << "    <rdfs:subClassOf rdf:resource=\"#" << link->parent.text() << "\"/>\n";
        ++i;
      }
      os << (has_links ? "  </rdfs:Class>\n" : "/>\n");
    } else if (const auto* prop = std::get_if<PropertyDecl>(&body)) {
      os << "  <rdf:Property rdf:ID=\"" << prop->name.text() << "\"";
      if (prop->domains.empty() && prop->ranges.empty()) {
        os << "/>\n";
        continue;
      }
      os << ">\n";
      for (const Name& d : prop->domains) os << "    <rdfs:domain rdf:resource=\"#" << d << "\"/>\n";
      for (const Name& r : prop->ranges) os << "    <rdfs:range rdf:resource=\"#" << r << "\"/>\n";
      os << "  </rdf:Property>\n";
    } else if (std::holds_alternative<SubclassLink>(body)) {
      throw std::invalid_argument("subclass link without a preceding class declaration");
    } else {
      throw std::invalid_argument("instance declarations must be written one per document");
    }
  }
  os << "</rdf:RDF>\n";
  return os.str();
}

}  // namespace ontosearch
