#include "uoce/cli/run_config.hpp"

#include <nlohmann/json.hpp>

#include "uoce/prompting/templates.hpp"

namespace uoce::cli {

using nlohmann::json;

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

llm::ModelConfig parse_model(const json& m, const std::filesystem::path& base) {
  llm::ModelConfig c;
  c.name = m.value("name", "");
  c.endpoint = m.at("endpoint").get<std::string>();
  if (c.endpoint.rfind("mock:", 0) == 0) c.endpoint = "mock:" + resolve(base, c.endpoint.substr(5)).string();
  c.model = m.value("model", c.endpoint.rfind("mock:", 0) == 0 ? std::string("mock") : std::string());
  c.api_key_env = m.value("api_key_env", c.api_key_env);
  c.temperature = m.value("temperature", c.temperature);
  c.max_new_tokens = m.value("max_new_tokens", c.max_new_tokens);
  if (m.contains("timeout_s"))
    c.timeout = std::chrono::milliseconds(static_cast<long long>(m["timeout_s"].get<double>() * 1000));
  c.max_retries = m.value("max_retries", c.max_retries);
  if (m.contains("retry_backoff_ms"))
    c.retry_backoff = std::chrono::milliseconds(m["retry_backoff_ms"].get<long long>());
  c.max_concurrency = m.value("max_concurrency", c.max_concurrency);
  c.validate();
  return c;
}

}  // namespace

RunConfig parse_run_config(std::string_view text, const std::filesystem::path& base_dir) {
  RunConfig cfg;
  try {
    const json doc = json::parse(text);
    if (doc.contains("prompt")) {
      const json& p = doc["prompt"];
      if (p.contains("kind")) {
        const auto k = prompt::parse_prompt_kind(p["kind"].get<std::string>());
        if (!k) throw io::InputError("prompt.kind must be nlprompt or ontoprompt");
        cfg.kind = *k;
      }
      if (p.contains("ordering")) {
        const auto o = prompt::parse_ordering(p["ordering"].get<std::string>());
        if (!o) throw io::InputError("prompt.ordering must be a permutation of D, E, F");
        cfg.ordering = *o;
      }
      if (p.contains("onto_format")) {
        const auto f = onto::parse_format(p["onto_format"].get<std::string>());
        if (!f) throw io::InputError("prompt.onto_format is not a known format");
        cfg.onto_format = *f;
      }
      if (p.contains("examples")) cfg.examples_path = resolve(base_dir, p["examples"].get<std::string>());
      if (p.contains("definitions"))
        cfg.definitions_path = resolve(base_dir, p["definitions"].get<std::string>());
      if (p.contains("num_examples")) cfg.num_examples = p["num_examples"].get<std::size_t>();
    }
    if (doc.contains("sweep") && doc["sweep"].contains("variants"))
      cfg.variants = doc["sweep"]["variants"].get<std::vector<std::string>>();
    if (doc.contains("models")) {
      for (const json& m : doc["models"]) cfg.models.push_back(parse_model(m, base_dir));
    }
    if (doc.contains("scoring")) {
      const json& s = doc["scoring"];
      if (s.contains("task")) {
        const auto t = parse_task(s["task"].get<std::string>());
        if (!t) throw io::InputError("scoring.task must be uoce, acos or aste");
        cfg.task = *t;
      }
      if (s.contains("metric")) {
        const auto m = metrics::parse_metric(s["metric"].get<std::string>());
        if (!m) throw io::InputError("scoring.metric must be component or tuple");
        cfg.metric = *m;
      }
    }
    if (doc.contains("cache")) cfg.cache_path = resolve(base_dir, doc["cache"].get<std::string>());
  } catch (const json::exception& e) {
    throw io::InputError(std::string("invalid run config: ") + e.what());
  } catch (const llm::ConfigError& e) {
    throw io::InputError(std::string("invalid run config: ") + e.what());
  }
  if (cfg.kind == prompt::PromptKind::OntoPrompt && !cfg.onto_format && cfg.variants.empty())
    cfg.onto_format = onto::SerializationFormat::Turtle;
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  const std::string text = io::read_text_file(path);
  try {
    return parse_run_config(text, path.parent_path());
  } catch (const io::InputError& e) {
    throw io::InputError(path.string() + ": " + e.what());
  }
}

prompt::PromptConfig make_prompt_config(const RunConfig& cfg, const io::DatasetFile& ds) {
  prompt::PromptConfig p;
  p.kind = cfg.kind;
  p.ordering = cfg.ordering;
  p.onto_format = cfg.onto_format;
  const std::vector<prompt::Example> examples = cfg.examples_path
                                                    ? prompt::load_examples_file(cfg.examples_path->string())
                                                    : prompt::default_examples();
  p.examples = prompt::exclude_dataset_sentences(examples, ds);
  if (cfg.num_examples && p.examples.size() > *cfg.num_examples) p.examples.resize(*cfg.num_examples);
  p.definitions_text = cfg.definitions_path ? io::read_text_file(*cfg.definitions_path)
                                            : std::string(prompt::default_definitions());
  return p;
}

std::vector<std::string> sweep_variants(const RunConfig& cfg) {
  std::vector<std::string> out = cfg.variants;
  if (cfg.kind == prompt::PromptKind::NLPrompt) {
    if (out.empty()) {
      for (const auto& o : prompt::all_orderings()) out.push_back(prompt::ordering_name(o));
    }
    for (std::string& v : out) {
      const auto o = prompt::parse_ordering(v);
      if (!o) throw io::InputError("sweep variant '" + v + "' is not an ordering of D, E, F");
      v = prompt::ordering_name(*o);
    }
  } else {
    if (out.empty()) {
      for (auto f : onto::kAllFormats) out.emplace_back(onto::format_name(f));
    }
    for (const std::string& v : out) {
      if (!onto::parse_format(v)) throw io::InputError("sweep variant '" + v + "' is not a format name");
    }
  }
  return out;
}

prompt::PromptConfig apply_variant(prompt::PromptConfig base, const std::string& variant) {
  if (base.kind == prompt::PromptKind::NLPrompt) {
    base.ordering = *prompt::parse_ordering(variant);
  } else {
    base.onto_format = *onto::parse_format(variant);
  }
  return base;
}

}  // namespace uoce::cli
