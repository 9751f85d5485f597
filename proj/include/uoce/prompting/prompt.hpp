#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "uoce/ontology/schema.hpp"
#include "uoce/ontology/serialize.hpp"

namespace uoce::prompt {

enum class PromptKind { NLPrompt, OntoPrompt };

std::string_view to_string(PromptKind k);
std::optional<PromptKind> parse_prompt_kind(std::string_view text);

/// D = definitions, E = in-context examples, F = format guidelines.
enum class Block { D, E, F, Query };

std::string_view to_string(Block b);

using Ordering = std::array<Block, 3>;

/// "DEF", "EDF", ... Case-insensitive; must be a permutation of D, E, F.
std::optional<Ordering> parse_ordering(std::string_view text);
std::string ordering_name(const Ordering& o);
/// DEF, DFE, EDF, EFD, FDE, FED.
const std::array<Ordering, 6>& all_orderings();

struct Example {
  std::string input;
  std::string output;

  friend bool operator==(const Example&, const Example&) = default;
};

struct PromptConfig {
  PromptKind kind = PromptKind::NLPrompt;
  Ordering ordering{Block::D, Block::E, Block::F};
  std::optional<onto::SerializationFormat> onto_format;  // OntoPrompt only
  std::vector<Example> examples;
  std::string definitions_text;  // NLPrompt only; ignored by OntoPrompt
  std::string format_text;       // F block; empty selects canonical_output_schema()
  std::string schema_base{onto::kDefaultSchemaBase};  // OntoPrompt D block
};

struct BlockSpan {
  Block block;
  std::size_t begin;
  std::size_t end;
};

struct PromptText {
  std::string text;
  std::vector<BlockSpan> spans;  // contiguous, in text order, Query last

  std::string_view span_text(Block b) const;
};

class PromptError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Blocks in cfg.ordering, then the Query block "Input: <text>\nOutput:".
PromptText build_nl_prompt(const PromptConfig& cfg, std::string_view query_text);

/// As build_nl_prompt, with D replaced by the schema serialized in
/// cfg.onto_format. cfg.definitions_text is not used.
PromptText build_onto_prompt(const PromptConfig& cfg, std::string_view query_text);

/// Dispatches on cfg.kind.
PromptText build_prompt(const PromptConfig& cfg, std::string_view query_text);

/// Query cue, kept as the fixed suffix of every prompt.
inline constexpr std::string_view kQueryPrefix = "Input: ";
inline constexpr std::string_view kGenerationCue = "\nOutput:";

/// Query text recovered from the final block of a built prompt, or nullopt.
std::optional<std::string> extract_query(std::string_view prompt_text);

}  // namespace uoce::prompt
