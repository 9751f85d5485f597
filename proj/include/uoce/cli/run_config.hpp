#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uoce/core/opinion.hpp"
#include "uoce/io/dataset.hpp"
#include "uoce/llm/backend.hpp"
#include "uoce/metrics/scoring.hpp"
#include "uoce/prompting/prompt.hpp"

namespace uoce::cli {

/// JSON run configuration:
///   {
///     "prompt":  {"kind": "nlprompt" | "ontoprompt", "ordering": "DEF",
///                 "onto_format": "ttl", "examples": "examples.json",
///                 "definitions": "definitions.txt", "num_examples": 2},
///     "sweep":   {"variants": ["DEF", "EDF"]},
///     "models":  [{"name", "endpoint", "model", "api_key_env", "temperature",
///                  "max_new_tokens", "timeout_s", "max_retries",
///                  "retry_backoff_ms", "max_concurrency"}],
///     "scoring": {"task": "uoce", "metric": "component"},
///     "cache":   "cache.jsonl"
///   }
/// Relative paths, including "mock:<path>" endpoints, resolve against the
/// directory holding the config file.
struct RunConfig {
  prompt::PromptKind kind = prompt::PromptKind::NLPrompt;
  prompt::Ordering ordering{prompt::Block::D, prompt::Block::E, prompt::Block::F};
  std::optional<onto::SerializationFormat> onto_format;
  std::optional<std::filesystem::path> examples_path;
  std::optional<std::filesystem::path> definitions_path;
  std::optional<std::size_t> num_examples;
  /// Sweep axis: orderings for NLPrompt, format names for OntoPrompt. Empty
  /// means all six orderings or all seven formats.
  std::vector<std::string> variants;
  std::vector<llm::ModelConfig> models;
  TaskKind task = TaskKind::UOCE;
  metrics::Metric metric = metrics::Metric::Component;
  std::optional<std::filesystem::path> cache_path;
};

/// Throws io::InputError on unreadable or invalid files.
RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);

/// Prompt settings for one run. Examples matching a dataset sentence are
/// left out.
prompt::PromptConfig make_prompt_config(const RunConfig& cfg, const io::DatasetFile& ds);

/// Variant names for a sweep, validated against the prompt kind.
std::vector<std::string> sweep_variants(const RunConfig& cfg);

/// @p base with the sweep variant applied.
prompt::PromptConfig apply_variant(prompt::PromptConfig base, const std::string& variant);

}  // namespace uoce::cli
