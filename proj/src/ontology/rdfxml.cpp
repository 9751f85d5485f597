#include <expat.h>

#include <algorithm>
#include <memory>
#include <optional>
#include <set>

#include "rdf_text.hpp"
#include "uoce/ontology/serialize.hpp"

namespace uoce::onto {

namespace {

constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

struct QName {
  std::string prefix;
  std::string local;
};

/// Prefix table for element names: graph prefixes first, generated ns<N>
/// prefixes for any predicate namespace the graph leaves unbound.
class XmlNames {
 public:
  explicit XmlNames(const Graph& g) {
    for (const auto& [p, ns] : g.prefixes()) {
      if (detail::is_ncname(p) && p.rfind("xml", 0) != 0 && !by_ns_.contains(ns)) {
        by_ns_[ns] = p;
        used_.insert(p);
      }
    }
    if (!by_ns_.contains(std::string(vocab::kRdf))) {
      std::string p = "rdf";
      while (used_.contains(p)) p += "_";
      by_ns_[std::string(vocab::kRdf)] = p;
      used_.insert(p);
    }
    std::size_t n = 0;
    for (const Triple& t : g.triples()) {
      const auto split = detail::split_ncname(t.predicate.value);
      if (!split) {
        throw GraphError("predicate cannot be written as an XML element name: " +
                         t.predicate.value);
      }
      if (by_ns_.contains(split->first)) continue;
      std::string p;
      do p = "ns" + std::to_string(n++);
      while (used_.contains(p));
      by_ns_[split->first] = p;
      used_.insert(p);
    }
  }

  QName element(std::string_view iri) const {
    const auto split = detail::split_ncname(iri);
    return {by_ns_.at(split->first), split->second};
  }
  std::string rdf(std::string_view local) const {
    return by_ns_.at(std::string(vocab::kRdf)) + ":" + std::string(local);
  }

  /// Declarations sorted by prefix.
  std::vector<std::pair<std::string, std::string>> declarations() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [ns, p] : by_ns_) out.emplace_back(p, ns);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::map<std::string, std::string> by_ns_;
  std::set<std::string> used_;
};

}  // namespace

std::string write_rdfxml(const Graph& g) {
  const XmlNames names(g);
  std::string out = "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n<" + names.rdf("RDF");
  for (const auto& [p, ns] : names.declarations())
    out += "\n    xmlns:" + p + "=\"" + detail::escape_xml(ns, true) + "\"";
  out += ">\n";

  auto subject_attr = [&](const Term& s) {
    return s.is_blank() ? names.rdf("nodeID") + "=\"" + detail::escape_xml(s.value, true) + "\""
                        : names.rdf("about") + "=\"" + detail::escape_xml(s.value, true) + "\"";
  };
  auto property = [&](const std::string& pred_iri, const Term& o) {
    const QName q = names.element(pred_iri);
    const std::string tag = q.prefix + ":" + q.local;
    std::string line = "    <" + tag;
    if (o.is_iri()) return line + " " + names.rdf("resource") + "=\"" +
                           detail::escape_xml(o.value, true) + "\"/>\n";
    if (o.is_blank()) return line + " " + names.rdf("nodeID") + "=\"" +
                             detail::escape_xml(o.value, true) + "\"/>\n";
    if (!o.lang.empty()) {
      line += " xml:lang=\"" + detail::escape_xml(o.lang, true) + "\"";
    } else if (o.datatype != vocab::xsd("string")) {
      line += " " + names.rdf("datatype") + "=\"" + detail::escape_xml(o.datatype, true) + "\"";
    }
    return line + ">" + detail::escape_xml(o.value, false) + "</" + tag + ">\n";
  };

  const std::string rdf_type = vocab::rdf("type");
  for (const detail::SubjectBlock& b : detail::group_by_subject(g)) {
    out += "  <" + names.rdf("Description") + " " + subject_attr(b.subject) + ">\n";
    for (const Term& t : b.types) out += property(rdf_type, t);
    for (const auto& [pred, objects] : b.properties) {
      for (const Term& o : objects) out += property(pred.value, o);
    }
    out += "  </" + names.rdf("Description") + ">\n";
  }
  out += "</" + names.rdf("RDF") + ">\n";
  return out;
}

namespace {

class RdfXmlReader {
 public:
  explicit RdfXmlReader(std::string_view text) : text_(text) {}

  Graph run() {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
        XML_ParserCreateNS(nullptr, ' '), &XML_ParserFree);
    if (!parser) throw std::bad_alloc();
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &RdfXmlReader::on_start, &RdfXmlReader::on_end);
    XML_SetCharacterDataHandler(parser_, &RdfXmlReader::on_text);
    XML_SetStartNamespaceDeclHandler(parser_, &RdfXmlReader::on_ns);

    const auto status =
        XML_Parse(parser_, text_.data(), static_cast<int>(text_.size()), XML_TRUE);
    if (!error_.empty()) throw ParseError("rdfx", error_line_, error_col_, error_);
    if (status != XML_STATUS_OK) {
      throw ParseError("rdfx", XML_GetCurrentLineNumber(parser_),
                       XML_GetCurrentColumnNumber(parser_) + 1,
                       XML_ErrorString(XML_GetErrorCode(parser_)));
    }
    return std::move(graph_);
  }

 private:
  enum class Expect { Root, Node, Property, Empty };

  struct Frame {
    Expect children = Expect::Root;  // what child elements of this element are
    Term subject;                    // for node elements and parseType=Resource
    Term predicate;                  // for property elements
    std::string lang;
    std::string datatype;
    std::string text;
    bool has_object = false;  // resource/nodeID attribute or child node seen
  };

  std::string_view text_;
  XML_Parser parser_ = nullptr;
  Graph graph_;
  std::vector<Frame> stack_;
  std::size_t blank_counter_ = 0;
  std::string error_;
  std::size_t error_line_ = 0, error_col_ = 0;

  static std::string rdf(std::string_view local) { return vocab::rdf(local); }

  static std::string expand_name(const XML_Char* name) {
    std::string s(name);
    const auto sep = s.find(' ');
    if (sep == std::string::npos) return s;
    return s.substr(0, sep) + s.substr(sep + 1);
  }

  void fail(const std::string& msg) {
    if (!error_.empty()) return;
    error_ = msg;
    error_line_ = XML_GetCurrentLineNumber(parser_);
    error_col_ = XML_GetCurrentColumnNumber(parser_) + 1;
    XML_StopParser(parser_, XML_FALSE);
  }

  Term fresh_blank() { return Term::blank("genid" + std::to_string(blank_counter_++)); }

  std::string inherited_lang() const { return stack_.empty() ? "" : stack_.back().lang; }

  void add(const Term& s, const Term& p, const Term& o) {
    try {
      graph_.add(s, p, o);
    } catch (const GraphError& e) {
      fail(e.what());
    }
  }

  static void on_ns(void* self, const XML_Char* prefix, const XML_Char* uri) {
    auto* r = static_cast<RdfXmlReader*>(self);
    if (prefix != nullptr && uri != nullptr) r->graph_.bind_prefix(prefix, uri);
  }

  static void on_start(void* self, const XML_Char* name, const XML_Char** attrs) {
    auto* r = static_cast<RdfXmlReader*>(self);
    if (!r->error_.empty()) return;
    const std::string element = expand_name(name);
    std::vector<std::pair<std::string, std::string>> attributes;
    for (std::size_t i = 0; attrs[i] != nullptr; i += 2)
      attributes.emplace_back(expand_name(attrs[i]), attrs[i + 1]);

    const Expect expect = r->stack_.empty() ? Expect::Root : r->stack_.back().children;
    if (expect == Expect::Root && element == rdf("RDF")) {
      Frame f;
      f.children = Expect::Node;
      f.lang = r->lang_of(attributes);
      r->stack_.push_back(std::move(f));
      return;
    }
    if (expect == Expect::Empty) {
      r->fail("property element with rdf:resource or rdf:nodeID must be empty");
      return;
    }
    if (expect == Expect::Root || expect == Expect::Node) {
      r->node_element(element, attributes);
    } else {
      r->property_element(element, attributes);
    }
  }

  std::string lang_of(const std::vector<std::pair<std::string, std::string>>& attributes) const {
    for (const auto& [k, v] : attributes) {
      if (k == std::string(kXmlNs) + "lang") return v;
    }
    return inherited_lang();
  }

  static bool is_syntax_attr(const std::string& k) {
    return k.rfind(std::string(kXmlNs), 0) == 0 || k == rdf("about") || k == rdf("ID") ||
           k == rdf("nodeID") || k == rdf("resource") || k == rdf("datatype") ||
           k == rdf("parseType") || k == rdf("bagID") || k == rdf("aboutEach");
  }

  Term literal_with(const std::string& value, const std::string& lang,
                    const std::string& datatype) {
    if (!datatype.empty()) return Term::typed(value, datatype);
    if (!lang.empty()) return Term::lang_literal(value, lang);
    return Term::literal(value);
  }

  void node_element(const std::string& element,
                    const std::vector<std::pair<std::string, std::string>>& attributes) {
    Frame f;
    f.children = Expect::Property;
    f.lang = lang_of(attributes);
    bool named = false;
    for (const auto& [k, v] : attributes) {
      if (k == rdf("about")) {
        f.subject = Term::iri(v);
        named = true;
      } else if (k == rdf("nodeID")) {
        f.subject = Term::blank(v);
        named = true;
      } else if (k == rdf("ID")) {
        f.subject = Term::iri("#" + v);
        named = true;
      }
    }
    if (!named) f.subject = fresh_blank();
    if (element != rdf("Description")) add(f.subject, Term::iri(rdf("type")), Term::iri(element));
    for (const auto& [k, v] : attributes) {
      if (is_syntax_attr(k)) continue;
      add(f.subject, Term::iri(k), k == rdf("type") ? Term::iri(v) : literal_with(v, f.lang, ""));
    }
    if (!stack_.empty() && stack_.back().children == Expect::Node && !stack_.back().predicate.value.empty()) {
      Frame& parent = stack_.back();
      if (parent.has_object) {
        fail("property element has more than one object");
        return;
      }
      parent.has_object = true;
      add(stack_[stack_.size() - 2].subject, parent.predicate, f.subject);
    }
    stack_.push_back(std::move(f));
  }

  void property_element(const std::string& element,
                        const std::vector<std::pair<std::string, std::string>>& attributes) {
    const Term& subject = stack_.back().subject;
    Frame f;
    f.predicate = Term::iri(element);
    f.lang = lang_of(attributes);
    f.children = Expect::Node;
    std::optional<Term> object;
    std::vector<std::pair<std::string, std::string>> property_attrs;
    for (const auto& [k, v] : attributes) {
      if (k == rdf("resource")) {
        object = Term::iri(v);
      } else if (k == rdf("nodeID")) {
        object = Term::blank(v);
      } else if (k == rdf("datatype")) {
        f.datatype = v;
      } else if (k == rdf("parseType")) {
        if (v != "Resource") {
          fail("rdf:parseType=\"" + v + "\" is not supported");
          return;
        }
        object = fresh_blank();
        f.children = Expect::Property;
        f.subject = *object;
      } else if (!is_syntax_attr(k)) {
        property_attrs.emplace_back(k, v);
      }
    }
    if (!object && !property_attrs.empty()) object = fresh_blank();
    if (object) {
      f.has_object = true;
      add(subject, f.predicate, *object);
      for (const auto& [k, v] : property_attrs)
        add(*object, Term::iri(k), k == rdf("type") ? Term::iri(v) : literal_with(v, f.lang, ""));
      if (f.children != Expect::Property) f.children = Expect::Empty;
    }
    stack_.push_back(std::move(f));
  }

  static void on_text(void* self, const XML_Char* s, int len) {
    auto* r = static_cast<RdfXmlReader*>(self);
    if (r->stack_.empty()) return;
    r->stack_.back().text.append(s, static_cast<std::size_t>(len));
  }

  static bool blank_text(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
  }

  static void on_end(void* self, const XML_Char*) {
    auto* r = static_cast<RdfXmlReader*>(self);
    if (!r->error_.empty() || r->stack_.empty()) return;
    Frame f = std::move(r->stack_.back());
    r->stack_.pop_back();
    if (f.predicate.value.empty()) return;  // node element or rdf:RDF
    if (f.subject.value.size() && f.children == Expect::Property) return;  // parseType=Resource
    if (f.has_object) {
      if (!blank_text(f.text)) r->fail("property element has both an object and text");
      return;
    }
    r->add(r->stack_.back().subject, f.predicate, r->literal_with(f.text, f.lang, f.datatype));
  }
};

}  // namespace

Graph read_rdfxml(std::string_view text) { return RdfXmlReader(text).run(); }

}  // namespace uoce::onto
