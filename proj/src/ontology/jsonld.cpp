#include <nlohmann/json.hpp>

#include "rdf_text.hpp"
#include "uoce/ontology/serialize.hpp"

namespace uoce::onto {

using nlohmann::json;

namespace {

std::string compact(const Graph& g, const std::string& iri) {
  if (auto c = detail::compact_iri(g.prefixes(), iri)) return *c;
  return iri;
}

json node_ref(const Graph& g, const Term& t) {
  return t.is_blank() ? "_:" + t.value : compact(g, t.value);
}

json value_object(const Graph& g, const Term& t) {
  if (!t.is_literal()) return json{{"@id", node_ref(g, t)}};
  json v{{"@value", t.value}};
  if (!t.lang.empty()) {
    v["@language"] = t.lang;
  } else if (t.datatype != vocab::xsd("string")) {
    v["@type"] = compact(g, t.datatype);
  }
  return v;
}

}  // namespace

std::string write_jsonld(const Graph& g) {
  json context = json::object();
  for (const auto& [prefix, ns] : g.prefixes()) context[prefix] = ns;

  json nodes = json::array();
  for (const detail::SubjectBlock& b : detail::group_by_subject(g)) {
    json node{{"@id", node_ref(g, b.subject)}};
    if (!b.types.empty()) {
      json types = json::array();
      for (const Term& t : b.types) types.push_back(node_ref(g, t));
      node["@type"] = std::move(types);
    }
    for (const auto& [pred, objects] : b.properties) {
      json values = json::array();
      for (const Term& o : objects) values.push_back(value_object(g, o));
      node[compact(g, pred.value)] = std::move(values);
    }
    nodes.push_back(std::move(node));
  }
  json doc{{"@context", std::move(context)}, {"@graph", std::move(nodes)}};
  return doc.dump(2) + "\n";
}

namespace {

struct TermDef {
  std::string iri;
  bool coerce_id = false;
  std::string datatype;
  std::string language;
};

class JsonLdReader {
 public:
  explicit JsonLdReader(std::string_view text) : text_(text) {}

  Graph run() {
    json doc;
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      const auto [line, col] = detail::line_col(text_, e.byte > 0 ? e.byte - 1 : 0);
      throw ParseError("jsonld", line, col, e.what());
    }
    if (doc.is_array()) {
      for (const json& item : doc) top(item);
    } else if (doc.is_object()) {
      top(doc);
    } else {
      fail("top-level value must be an object or array");
    }
    bind_prefixes();
    return std::move(graph_);
  }

 private:
  std::string_view text_;
  Graph graph_;
  std::map<std::string, TermDef> terms_;
  std::string vocab_;
  std::string base_;
  std::size_t blank_counter_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("jsonld", 0, 0, msg); }

  void top(const json& obj) {
    if (!obj.is_object()) fail("expected a node object");
    if (obj.contains("@context")) load_context(obj["@context"]);
    if (obj.contains("@graph")) {
      const json& nodes = obj["@graph"];
      if (!nodes.is_array()) fail("@graph must be an array");
      for (const json& n : nodes) node(n);
      bool only_graph = true;
      for (const auto& [k, v] : obj.items()) {
        if (k != "@context" && k != "@graph") only_graph = false;
      }
      if (only_graph) return;
    }
    node(obj);
  }

  void load_context(const json& ctx) {
    if (ctx.is_array()) {
      for (const json& c : ctx) load_context(c);
      return;
    }
    if (ctx.is_null()) {
      terms_.clear();
      vocab_.clear();
      return;
    }
    if (!ctx.is_object()) fail("remote contexts are not supported");
    if (ctx.contains("@base") && ctx["@base"].is_string()) base_ = ctx["@base"].get<std::string>();
    if (ctx.contains("@vocab") && ctx["@vocab"].is_string())
      vocab_ = ctx["@vocab"].get<std::string>();
    // Two passes so that definitions may refer to prefixes declared later.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& [key, def] : ctx.items()) {
        if (!key.empty() && key[0] == '@') continue;
        TermDef td;
        if (def.is_string()) {
          td.iri = def.get<std::string>();
        } else if (def.is_object()) {
          td.iri = def.contains("@id") ? def["@id"].get<std::string>() : key;
          if (def.contains("@type")) {
            const std::string t = def["@type"].get<std::string>();
            if (t == "@id" || t == "@vocab") td.coerce_id = true;
            else td.datatype = t;
          }
          if (def.contains("@language") && def["@language"].is_string())
            td.language = def["@language"].get<std::string>();
          if (def.contains("@container")) fail("term containers are not supported");
        } else if (def.is_null()) {
          terms_.erase(key);
          continue;
        } else {
          fail("invalid term definition for '" + key + "'");
        }
        terms_[key] = td;
      }
      for (auto& [key, td] : terms_) {
        td.iri = expand(td.iri, true);
        if (!td.datatype.empty()) td.datatype = expand(td.datatype, true);
      }
    }
  }

  /// Expands a term, compact IRI or relative reference. @p vocab selects
  /// vocabulary-relative resolution (keys, @type) over document-relative.
  std::string expand(const std::string& value, bool vocab) const {
    if (value.rfind("_:", 0) == 0) return value;
    if (vocab) {
      const auto t = terms_.find(value);
      if (t != terms_.end()) return t->second.iri;
    }
    const auto colon = value.find(':');
    if (colon != std::string::npos) {
      const std::string prefix = value.substr(0, colon);
      const std::string suffix = value.substr(colon + 1);
      if (suffix.rfind("//", 0) != 0) {
        const auto t = terms_.find(prefix);
        if (t != terms_.end()) return t->second.iri + suffix;
      }
      if (detail::has_scheme(value)) return value;
    }
    if (vocab && !vocab_.empty()) return vocab_ + value;
    return detail::resolve_iri(base_, value);
  }

  Term subject_term(const std::string& id) {
    const std::string iri = expand(id, false);
    if (iri.rfind("_:", 0) == 0) return Term::blank(iri.substr(2));
    return Term::iri(iri);
  }

  Term fresh_blank() { return Term::blank("genid" + std::to_string(blank_counter_++)); }

  Term node(const json& obj) {
    if (!obj.is_object()) fail("expected a node object");
    Term subject = obj.contains("@id") ? subject_term(obj["@id"].get<std::string>()) : fresh_blank();
    for (const auto& [key, value] : obj.items()) {
      if (key == "@id" || key == "@context") continue;
      if (key == "@type") {
        const Term type = Term::iri(vocab::rdf("type"));
        auto add_type = [&](const json& t) {
          if (!t.is_string()) fail("@type values must be strings");
          graph_.add(subject, type, subject_term(expand(t.get<std::string>(), true)));
        };
        if (value.is_array()) {
          for (const json& t : value) add_type(t);
        } else {
          add_type(value);
        }
        continue;
      }
      if (key == "@graph") fail("named graphs are not supported");
      if (!key.empty() && key[0] == '@') continue;
      const std::string pred = expand(key, true);
      if (!detail::has_scheme(pred)) continue;  // undefined term: dropped, as JSON-LD does
      const auto td = terms_.find(key);
      const TermDef* def = td == terms_.end() ? nullptr : &td->second;
      const Term p = Term::iri(pred);
      if (value.is_array()) {
        for (const json& v : value) property_value(subject, p, v, def);
      } else {
        property_value(subject, p, value, def);
      }
    }
    return subject;
  }

  void property_value(const Term& subject, const Term& p, const json& v, const TermDef* def) {
    if (v.is_null()) return;
    if (v.is_array()) fail("nested arrays are not supported");
    if (v.is_object()) {
      if (v.contains("@list") || v.contains("@set")) fail("@list and @set are not supported");
      if (v.contains("@value")) {
        graph_.add(subject, p, value_literal(v));
        return;
      }
      graph_.add(subject, p, node(v));
      return;
    }
    if (v.is_string()) {
      const std::string s = v.get<std::string>();
      if (def && def->coerce_id) {
        graph_.add(subject, p, subject_term(s));
      } else if (def && !def->datatype.empty()) {
        graph_.add(subject, p, Term::typed(s, def->datatype));
      } else if (def && !def->language.empty()) {
        graph_.add(subject, p, Term::lang_literal(s, def->language));
      } else {
        graph_.add(subject, p, Term::literal(s));
      }
      return;
    }
    graph_.add(subject, p, scalar_literal(v));
  }

  static Term scalar_literal(const json& v) {
    if (v.is_boolean())
      return Term::typed(v.get<bool>() ? "true" : "false", vocab::xsd("boolean"));
    if (v.is_number_integer()) return Term::typed(v.dump(), vocab::xsd("integer"));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15E", v.get<double>());
    return Term::typed(buf, vocab::xsd("double"));
  }

  Term value_literal(const json& v) {
    const json& raw = v["@value"];
    if (!raw.is_string()) {
      if (v.contains("@type")) {
        return Term::typed(raw.is_string() ? raw.get<std::string>() : raw.dump(),
                           expand(v["@type"].get<std::string>(), true));
      }
      return scalar_literal(raw);
    }
    const std::string s = raw.get<std::string>();
    if (v.contains("@language")) return Term::lang_literal(s, v["@language"].get<std::string>());
    if (v.contains("@type")) return Term::typed(s, expand(v["@type"].get<std::string>(), true));
    return Term::literal(s);
  }

  void bind_prefixes() {
    for (const auto& [key, td] : terms_) {
      if (td.coerce_id || !td.datatype.empty() || !td.language.empty()) continue;
      const char last = td.iri.empty() ? '\0' : td.iri.back();
      if (last == '#' || last == '/' || last == ':') graph_.bind_prefix(key, td.iri);
    }
  }
};

}  // namespace

Graph read_jsonld(std::string_view text) {
  try {
    return JsonLdReader(text).run();
  } catch (const json::exception& e) {
    throw ParseError("jsonld", 0, 0, e.what());
  } catch (const GraphError& e) {
    throw ParseError("jsonld", 0, 0, e.what());
  }
}

}  // namespace uoce::onto
