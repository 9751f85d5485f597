#include "uoce/prompting/prompt.hpp"

#include <cctype>

#include "uoce/ontology/schema.hpp"
#include "uoce/prompting/templates.hpp"

namespace uoce::prompt {

std::string_view to_string(PromptKind k) {
  return k == PromptKind::NLPrompt ? "nlprompt" : "ontoprompt";
}

std::optional<PromptKind> parse_prompt_kind(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "nlprompt" || lower == "nl") return PromptKind::NLPrompt;
  if (lower == "ontoprompt" || lower == "onto") return PromptKind::OntoPrompt;
  return std::nullopt;
}

std::string_view to_string(Block b) {
  switch (b) {
    case Block::D: return "D";
    case Block::E: return "E";
    case Block::F: return "F";
    case Block::Query: return "Query";
  }
  return "";
}

std::optional<Ordering> parse_ordering(std::string_view text) {
  if (text.size() != 3) return std::nullopt;
  Ordering o{};
  bool seen[3] = {false, false, false};
  for (std::size_t i = 0; i < 3; ++i) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    const int idx = c == 'D' ? 0 : c == 'E' ? 1 : c == 'F' ? 2 : -1;
    if (idx < 0 || seen[idx]) return std::nullopt;
    seen[idx] = true;
    o[i] = static_cast<Block>(idx);
  }
  return o;
}

std::string ordering_name(const Ordering& o) {
  std::string out;
  for (Block b : o) out += to_string(b);
  return out;
}

const std::array<Ordering, 6>& all_orderings() {
  using B = Block;
  static const std::array<Ordering, 6> kOrderings = {{{B::D, B::E, B::F},
                                                      {B::D, B::F, B::E},
                                                      {B::E, B::D, B::F},
                                                      {B::E, B::F, B::D},
                                                      {B::F, B::D, B::E},
                                                      {B::F, B::E, B::D}}};
  return kOrderings;
}

std::string_view PromptText::span_text(Block b) const {
  for (const BlockSpan& s : spans) {
    if (s.block == b) return std::string_view(text).substr(s.begin, s.end - s.begin);
  }
  return {};
}

namespace {

std::string examples_block(const std::vector<Example>& examples) {
  std::string out = "Examples:\n";
  for (const Example& e : examples)
    out += std::string(kQueryPrefix) + e.input + std::string(kGenerationCue) + " " + e.output + "\n";
  return out + "\n";
}

PromptText assemble(const PromptConfig& cfg, const std::string& d_block, std::string_view query) {
  if (cfg.examples.empty()) throw PromptError("the E block is configured but no examples were given");
  const std::string f_block =
      (cfg.format_text.empty() ? canonical_output_schema() : cfg.format_text) + "\n";
  const std::string e_block = examples_block(cfg.examples);

  PromptText p;
  auto append = [&](Block b, std::string_view content) {
    const std::size_t begin = p.text.size();
    p.text += content;
    p.spans.push_back({b, begin, p.text.size()});
  };
  for (Block b : cfg.ordering) {
    switch (b) {
      case Block::D: append(b, d_block); break;
      case Block::E: append(b, e_block); break;
      case Block::F: append(b, f_block); break;
      case Block::Query: break;
    }
  }
  append(Block::Query, std::string(kQueryPrefix) + std::string(query) + std::string(kGenerationCue));
  return p;
}

}  // namespace

PromptText build_nl_prompt(const PromptConfig& cfg, std::string_view query_text) {
  if (cfg.kind != PromptKind::NLPrompt) throw PromptError("build_nl_prompt needs an NLPrompt config");
  if (cfg.definitions_text.empty()) throw PromptError("NLPrompt needs definitions text for the D block");
  return assemble(cfg, cfg.definitions_text + "\n", query_text);
}

PromptText build_onto_prompt(const PromptConfig& cfg, std::string_view query_text) {
  if (cfg.kind != PromptKind::OntoPrompt)
    throw PromptError("build_onto_prompt needs an OntoPrompt config");
  if (!cfg.onto_format) throw PromptError("OntoPrompt needs an ontology serialization format");
  const std::string d_block =
      onto::serialize_graph(onto::build_uoc_schema(cfg.schema_base), *cfg.onto_format);
  return assemble(cfg, d_block, query_text);
}

PromptText build_prompt(const PromptConfig& cfg, std::string_view query_text) {
  return cfg.kind == PromptKind::NLPrompt ? build_nl_prompt(cfg, query_text)
                                          : build_onto_prompt(cfg, query_text);
}

std::optional<std::string> extract_query(std::string_view prompt_text) {
  if (prompt_text.size() < kGenerationCue.size() ||
      prompt_text.substr(prompt_text.size() - kGenerationCue.size()) != kGenerationCue)
    return std::nullopt;
  const std::string_view body = prompt_text.substr(0, prompt_text.size() - kGenerationCue.size());
  const auto at = body.rfind(kQueryPrefix);
  if (at == std::string_view::npos) return std::nullopt;
  if (at != 0 && body[at - 1] != '\n') return std::nullopt;
  return std::string(body.substr(at + kQueryPrefix.size()));
}

}  // namespace uoce::prompt
