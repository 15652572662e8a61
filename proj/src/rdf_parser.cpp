#include "ontosearch/rdf_parser.hpp"

#include <expat.h>

#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "ontosearch/error.hpp"

namespace ontosearch {

namespace {

constexpr char kNsSeparator = ' ';
constexpr std::string_view kXmlNamespace = "http://www.w3.org/XML/1998/namespace";

struct QName {
  std::string_view ns;
  std::string_view local;

  bool is(std::string_view n, std::string_view l) const { return ns == n && local == l; }
  bool in_rdf_vocabulary() const { return ns == kRdfNamespace || ns == kRdfsNamespace; }
};

QName split(const char* expat_name) {
  std::string_view full(expat_name);
  auto sep = full.rfind(kNsSeparator);
  if (sep == std::string_view::npos) return {{}, full};
  return {full.substr(0, sep), full.substr(sep + 1)};
}

std::string display(const QName& q) {
  if (q.ns == kRdfNamespace) return "rdf:" + std::string(q.local);
  if (q.ns == kRdfsNamespace) return "rdfs:" + std::string(q.local);
  if (q.ns == kXmlNamespace) return "xml:" + std::string(q.local);
  return std::string(q.local);
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

enum class FrameKind { Root, Class, SubclassOf, Property, Domain, Range, Instance, PropertyValue };

struct Frame {
  FrameKind kind;
  QName name;
  std::size_t decl_index = 0;  // Class / Property / Instance
  std::string text{};          // PropertyValue
  std::optional<Name> resource{};
  std::optional<Name> property{};
};

struct Attributes {
  std::optional<std::string_view> id;
  std::optional<std::string_view> resource;
};

class SubsetParser {
public:
  SubsetParser(std::string_view text, std::string_view doc_id) : text_(text), doc_id_(doc_id) {}

  std::vector<Declaration> run() {
    if (text_.size() > static_cast<std::size_t>(INT_MAX)) {
      throw Error(ErrorCode::MalformedXml, doc_id_ + ": document too large");
    }
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> owner(
        XML_ParserCreateNS("UTF-8", kNsSeparator), &XML_ParserFree);
    xp_ = owner.get();
    if (xp_ == nullptr) throw std::bad_alloc();
    XML_SetUserData(xp_, this);
    XML_SetElementHandler(xp_, &SubsetParser::on_start, &SubsetParser::on_end);
    XML_SetCharacterDataHandler(xp_, &SubsetParser::on_text);
    XML_SetStartNamespaceDeclHandler(xp_, &SubsetParser::on_namespace);
    XML_SetStartDoctypeDeclHandler(xp_, &SubsetParser::on_doctype);

    auto status = XML_Parse(xp_, text_.data(), static_cast<int>(text_.size()), XML_TRUE);
    if (failure_) throw *failure_;
    if (status != XML_STATUS_OK) {
      throw Error(ErrorCode::MalformedXml, location(XML_GetCurrentLineNumber(xp_)) + ": " +
                                               XML_ErrorString(XML_GetErrorCode(xp_)));
    }
    return std::move(out_);
  }

private:
  // -- expat trampolines ---------------------------------------------------

  static void on_start(void* self, const char* name, const char** attrs) {
    auto* p = static_cast<SubsetParser*>(self);
    if (!p->failure_) p->start_element(split(name), attrs);
  }
  static void on_end(void* self, const char* name) {
    auto* p = static_cast<SubsetParser*>(self);
    if (!p->failure_) p->end_element(split(name));
  }
  static void on_text(void* self, const XML_Char* s, int len) {
    auto* p = static_cast<SubsetParser*>(self);
    if (!p->failure_) p->characters(std::string_view(s, static_cast<std::size_t>(len)));
  }
  static void on_namespace(void* self, const XML_Char* prefix, const XML_Char* uri) {
    auto* p = static_cast<SubsetParser*>(self);
    if (p->failure_ || prefix == nullptr) return;
    std::string_view pre(prefix);
    std::string_view u = uri ? std::string_view(uri) : std::string_view{};
    if ((pre == "rdf" && u != kRdfNamespace) || (pre == "rdfs" && u != kRdfsNamespace)) {
      p->fail(ErrorCode::UnknownConstruct,
              "prefix '" + std::string(pre) + "' bound to unsupported namespace '" +
                  std::string(u) + "'");
    }
  }
  static void on_doctype(void* self, const XML_Char*, const XML_Char*, const XML_Char*, int) {
    auto* p = static_cast<SubsetParser*>(self);
    if (!p->failure_) p->fail(ErrorCode::UnknownConstruct, "DOCTYPE declarations are not supported");
  }

  // -- helpers --------------------------------------------------------------

  std::string location(std::size_t line) const { return doc_id_ + ":" + std::to_string(line); }

  std::size_t line() const { return XML_GetCurrentLineNumber(xp_); }

  void fail(ErrorCode code, const std::string& message) {
    if (failure_) return;
    failure_.emplace(code, location(line()) + ": " + message);
    XML_StopParser(xp_, XML_FALSE);
  }

  SourceSpan open_span() const {
    return {doc_id_, line(), line(), static_cast<std::size_t>(XML_GetCurrentByteIndex(xp_)), 0};
  }

  void close_span(SourceSpan& span) const {
    span.last_line = line();
    span.end_offset = static_cast<std::size_t>(XML_GetCurrentByteIndex(xp_)) +
                      static_cast<std::size_t>(XML_GetCurrentByteCount(xp_));
  }

  // Collects rdf:ID / rdf:resource and rejects every other attribute except
  // xml:base where allow_base is set.
  std::optional<Attributes> read_attributes(const QName& element, const char** attrs,
                                            bool allow_id, bool allow_resource, bool allow_base) {
    Attributes out;
    for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
      QName a = split(attrs[i]);
      std::string_view value(attrs[i + 1]);
      if (allow_id && a.is(kRdfNamespace, "ID")) {
        out.id = value;
      } else if (allow_resource && a.is(kRdfNamespace, "resource")) {
        out.resource = value;
      } else if (allow_base && a.is(kXmlNamespace, "base")) {
        // Accepted and ignored: references resolve by fragment only.
      } else if (a.is(kRdfNamespace, "about")) {
        fail(ErrorCode::UnknownConstruct,
             "rdf:about on <" + display(element) + "> is not supported; use rdf:ID");
        return std::nullopt;
      } else {
        fail(ErrorCode::UnknownConstruct,
             "attribute '" + display(a) + "' not supported on <" + display(element) + ">");
        return std::nullopt;
      }
    }
    return out;
  }

  std::optional<Name> require_id(const QName& element, const Attributes& attrs) {
    if (!attrs.id) {
      fail(ErrorCode::MissingId, "<" + display(element) + "> has no rdf:ID");
      return std::nullopt;
    }
    auto name = Name::parse(*attrs.id);
    if (!name) {
      fail(ErrorCode::MissingId,
           "<" + display(element) + "> has an invalid rdf:ID '" + std::string(*attrs.id) + "'");
    }
    return name;
  }

  std::optional<Name> require_reference(const QName& element, const Attributes& attrs) {
    if (!attrs.resource) {
      fail(ErrorCode::BadReference, "<" + display(element) + "> requires rdf:resource");
      return std::nullopt;
    }
    return parse_reference(*attrs.resource);
  }

  std::optional<Name> parse_reference(std::string_view ref) {
    std::optional<Name> name;
    if (ref.size() > 1 && ref.front() == '#') name = Name::parse(ref.substr(1));
    if (!name) {
      fail(ErrorCode::BadReference,
           "rdf:resource '" + std::string(ref) + "' is not of the form \"#Name\"");
    }
    return name;
  }

  void unknown(const QName& element, std::string_view context) {
    fail(ErrorCode::UnknownConstruct,
         "<" + display(element) + "> is not allowed " + std::string(context));
  }

  template <class T>
  T& body_at(std::size_t index) {
    return std::get<T>(out_[index].body);
  }

  // -- element dispatch -----------------------------------------------------

  void start_element(const QName& q, const char** attrs) {
    if (stack_.empty()) {
      start_document_element(q, attrs);
      return;
    }
    Frame& parent = stack_.back();
    switch (parent.kind) {
      case FrameKind::Root:
        if (q.is(kRdfsNamespace, "Class")) {
          start_class(q, attrs);
        } else if (q.is(kRdfNamespace, "Property")) {
          start_property(q, attrs);
        } else {
          unknown(q, "inside rdf:RDF");
        }
        return;
      case FrameKind::Class:
        if (q.is(kRdfsNamespace, "subClassOf")) {
          start_subclass(q, attrs, parent.decl_index);
        } else {
          unknown(q, "inside rdfs:Class");
        }
        return;
      case FrameKind::Property:
        if (q.is(kRdfsNamespace, "domain") || q.is(kRdfsNamespace, "range")) {
          start_domain_or_range(q, attrs, parent.decl_index);
        } else {
          unknown(q, "inside rdf:Property");
        }
        return;
      case FrameKind::Instance:
        if (q.in_rdf_vocabulary()) {
          unknown(q, "as a property of an instance");
        } else {
          start_property_value(q, attrs);
        }
        return;
      case FrameKind::SubclassOf:
      case FrameKind::Domain:
      case FrameKind::Range:
      case FrameKind::PropertyValue:
        unknown(q, "inside <" + display(parent.name) + ">");
        return;
    }
  }

  void start_document_element(const QName& q, const char** attrs) {
    if (q.is(kRdfNamespace, "RDF")) {
      if (!read_attributes(q, attrs, false, false, true)) return;
      stack_.push_back({FrameKind::Root, q});
      return;
    }
    if (q.in_rdf_vocabulary()) {
      unknown(q, "as the document element; expected rdf:RDF or an instance element");
      return;
    }
    auto class_name = Name::parse(q.local);
    if (!class_name) {
      unknown(q, "as an instance element: not a valid class name");
      return;
    }
    auto a = read_attributes(q, attrs, true, false, true);
    if (!a) return;
    auto id = require_id(q, *a);
    if (!id) return;
    out_.push_back({InstanceDecl{*id, *class_name, {}}, open_span()});
    stack_.push_back({FrameKind::Instance, q, out_.size() - 1});
  }

  void start_class(const QName& q, const char** attrs) {
    auto a = read_attributes(q, attrs, true, false, false);
    if (!a) return;
    auto id = require_id(q, *a);
    if (!id) return;
    out_.push_back({ClassDecl{*id}, open_span()});
    stack_.push_back({FrameKind::Class, q, out_.size() - 1});
  }

  void start_subclass(const QName& q, const char** attrs, std::size_t class_index) {
    auto a = read_attributes(q, attrs, false, true, false);
    if (!a) return;
    auto parent = require_reference(q, *a);
    if (!parent) return;
    Name child = body_at<ClassDecl>(class_index).name;
    out_.push_back({SubclassLink{std::move(child), *parent}, open_span()});
    stack_.push_back({FrameKind::SubclassOf, q, out_.size() - 1});
  }

  void start_property(const QName& q, const char** attrs) {
    auto a = read_attributes(q, attrs, true, false, false);
    if (!a) return;
    auto id = require_id(q, *a);
    if (!id) return;
    out_.push_back({PropertyDecl{*id, {}, {}}, open_span()});
    stack_.push_back({FrameKind::Property, q, out_.size() - 1});
  }

  void start_domain_or_range(const QName& q, const char** attrs, std::size_t property_index) {
    auto a = read_attributes(q, attrs, false, true, false);
    if (!a) return;
    auto target = require_reference(q, *a);
    if (!target) return;
    auto& decl = body_at<PropertyDecl>(property_index);
    bool is_domain = q.local == "domain";
    (is_domain ? decl.domains : decl.ranges).push_back(*target);
    stack_.push_back({is_domain ? FrameKind::Domain : FrameKind::Range, q, property_index});
  }

  void start_property_value(const QName& q, const char** attrs) {
    auto property = Name::parse(q.local);
    if (!property) {
      unknown(q, "as a property: not a valid property name");
      return;
    }
    auto a = read_attributes(q, attrs, false, true, false);
    if (!a) return;
    Frame frame{FrameKind::PropertyValue, q, stack_.back().decl_index};
    frame.property = std::move(property);
    if (a->resource) {
      frame.resource = parse_reference(*a->resource);
      if (!frame.resource) return;
    }
    stack_.push_back(std::move(frame));
  }

  void characters(std::string_view s) {
    if (stack_.empty()) return;
    Frame& top = stack_.back();
    if (top.kind == FrameKind::PropertyValue) {
      top.text.append(s);
    } else if (!is_blank(s)) {
      fail(ErrorCode::UnknownConstruct,
           "unexpected text '" + trim(s) + "' inside <" + display(top.name) + ">");
    }
  }

  void end_element(const QName&) {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    switch (frame.kind) {
      case FrameKind::Root:
      case FrameKind::Domain:
      case FrameKind::Range:
        return;
      case FrameKind::Class:
      case FrameKind::Property:
      case FrameKind::Instance:
      case FrameKind::SubclassOf:
        close_span(out_[frame.decl_index].source);
        return;
      case FrameKind::PropertyValue:
        finish_property_value(frame);
        return;
    }
  }

  void finish_property_value(Frame& frame) {
    Value value = Literal{trim(frame.text)};
    if (frame.resource) {
      if (!is_blank(frame.text)) {
        fail(ErrorCode::UnknownConstruct,
             "<" + display(frame.name) + "> has both rdf:resource and text content");
        return;
      }
      value = ResourceRef{*frame.resource};
    }
    body_at<InstanceDecl>(frame.decl_index)
        .assertions.push_back({std::move(*frame.property), std::move(value)});
  }

  std::string_view text_;
  std::string doc_id_;
  XML_Parser xp_ = nullptr;
  std::vector<Declaration> out_;
  std::vector<Frame> stack_;
  std::optional<Error> failure_;
};

}  // namespace

const std::string& value_text(const Value& value) {
  if (const auto* lit = std::get_if<Literal>(&value)) return lit->text;
  return std::get<ResourceRef>(value).target.text();
}

bool same_structure(const std::vector<Declaration>& a, const std::vector<Declaration>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].body == b[i].body)) return false;
  }
  return true;
}

std::vector<Declaration> parse_document(std::string_view text, std::string_view doc_id) {
  return SubsetParser(text, doc_id).run();
}

}  // namespace ontosearch
