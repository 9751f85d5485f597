#include "uoce/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <set>

#include "uoce/io/predictions.hpp"
#include "uoce/io/stats.hpp"
#include "uoce/llm/run_eval.hpp"
#include "uoce/ontology/instantiate.hpp"
#include "uoce/ontology/schema.hpp"
#include "uoce/ontology/serialize.hpp"

namespace uoce::cli {

namespace {

std::string safe_dir_name(const std::string& s) {
  std::string out;
  for (char c : s) {
    const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  if (out.empty() || out == "." || out == "..") out = "model";
  return out;
}

/// Gold ids the predictions lack become empty prediction sets.
metrics::Corpus aligned_predictions(const io::PredictionsFile& p, const io::DatasetFile& ds) {
  metrics::Corpus out = p.corpus();
  for (const SentenceRecord& r : ds.records) out.try_emplace(r.id);
  return out;
}

void print_diagnostics(std::ostream& err, const std::vector<Diagnostic>& diags, std::size_t limit = 50) {
  std::size_t shown = 0;
  for (const Diagnostic& d : diags) {
    if (shown++ == limit) {
      err << "... " << (diags.size() - limit) << " more\n";
      break;
    }
    err << format_diagnostic(d) << "\n";
  }
}

struct Globals {
  std::string config;
  std::string cache;
  bool strict = false;
  bool lenient = false;
  std::string base_iri;
  bool csv = false;
};

std::unique_ptr<llm::ResponseCache> open_cache(const Globals& g, const RunConfig* cfg) {
  if (!g.cache.empty()) return std::make_unique<llm::ResponseCache>(g.cache);
  if (cfg && cfg->cache_path) return std::make_unique<llm::ResponseCache>(*cfg->cache_path);
  return std::make_unique<llm::ResponseCache>();
}

RunConfig require_config(const Globals& g) {
  if (g.config.empty()) throw io::InputError("this command needs --config <run-config.json>");
  RunConfig cfg = load_run_config(g.config);
  if (cfg.models.empty()) throw io::InputError(g.config + ": no models configured");
  return cfg;
}

int cmd_validate(const Globals& g, const std::string& dataset_path, const std::string& predictions_path,
                 std::ostream& out, std::ostream& err) {
  const io::DatasetFile ds = io::load_dataset_file(dataset_path);
  std::size_t opinions = 0;
  for (const SentenceRecord& r : ds.records) opinions += r.opinions.size();
  out << dataset_path << ": " << ds.records.size() << " records, " << opinions << " opinions, "
      << ds.warnings.size() << " warnings\n";
  print_diagnostics(err, ds.warnings);
  bool warnings = !ds.warnings.empty();
  if (!predictions_path.empty()) {
    const io::PredictionsFile p = io::load_predictions_file(predictions_path);
    const auto diags = io::check_against_dataset(p, ds);
    out << predictions_path << ": " << p.records.size() << " records, "
        << count_severity(diags, Severity::Error) << " errors, "
        << count_severity(diags, Severity::Warning) << " warnings\n";
    print_diagnostics(err, diags);
    if (has_errors(diags)) return kExitInputError;
    warnings = warnings || !diags.empty();
  }
  return warnings && !g.lenient ? kExitWarnings : kExitOk;
}

int cmd_stats(const Globals& g, const std::string& dataset_path, std::ostream& out) {
  const io::DatasetFile ds = io::load_dataset_file(dataset_path);
  out << render_stats(io::dataset_stats(ds), g.csv);
  return kExitOk;
}

int cmd_score(const Globals& g, const std::string& gold_path, const std::string& pred_path,
              const std::string& task_name, const std::string& metric_name, std::ostream& out,
              std::ostream& err) {
  const auto task = parse_task(task_name);
  if (!task) throw io::InputError("unknown task '" + task_name + "' (uoce, acos, aste)");
  const auto metric = metrics::parse_metric(metric_name);
  if (!metric) throw io::InputError("unknown metric '" + metric_name + "' (component, tuple)");
  const io::DatasetFile ds = io::load_dataset_file(gold_path);
  const io::PredictionsFile p = io::load_predictions_file(pred_path);
  const auto diags = io::check_against_dataset(p, ds);
  if (has_errors(diags)) {
    print_diagnostics(err, diags);
    return kExitInputError;
  }
  print_diagnostics(err, diags);
  const metrics::ScoreReport r = metrics::score_task(ds.corpus(), aligned_predictions(p, ds), *task, *metric);
  out << render_score(r, g.csv);
  return diags.empty() ? kExitOk : kExitWarnings;
}

int cmd_run(const Globals& g, const std::string& dataset_path, const std::string& out_path,
            const std::string& model_name, std::ostream& out, std::ostream& err) {
  const RunConfig cfg = require_config(g);
  const io::DatasetFile ds = io::load_dataset_file(dataset_path);
  const llm::ModelConfig* model = &cfg.models.front();
  if (!model_name.empty()) {
    model = nullptr;
    for (const auto& m : cfg.models) {
      if (m.label() == model_name) model = &m;
    }
    if (!model) throw io::InputError("no model named '" + model_name + "' in " + g.config);
  }
  auto cache = open_cache(g, &cfg);
  auto backend = llm::make_backend(*model);
  llm::RunStats stats;
  const io::PredictionsFile p = llm::run_eval(ds, make_prompt_config(cfg, ds), *model, *backend,
                                              *cache, llm::RunOptions{g.strict}, &stats);
  const std::string text = io::render_predictions(p);
  if (out_path.empty() || out_path == "-") out << text;
  else io::write_text_file(out_path, text);
  err << "sentences " << stats.sentences << ", backend requests " << backend->request_count()
      << ", cache hits " << stats.cache_hits << ", failed " << stats.failed << "\n";
  return stats.failed > 0 || p.diagnostic_count(Severity::Error) > 0 ? kExitWarnings : kExitOk;
}

int cmd_sweep(const Globals& g, const std::string& dataset_path, const std::string& out_dir,
              std::ostream& out, std::ostream& err) {
  const RunConfig cfg = require_config(g);
  const io::DatasetFile ds = io::load_dataset_file(dataset_path);
  auto cache = open_cache(g, &cfg);
  const SweepResult result = run_sweep(cfg, ds, out_dir, *cache, g.strict);
  const std::string grid = render_sweep(result.report, g.csv);
  io::write_text_file(std::filesystem::path(out_dir) / (g.csv ? "sweep.csv" : "sweep.txt"), grid);
  out << grid;
  err << "backend requests " << result.backend_requests << ", cache hits " << result.cache_hits << "\n";
  return result.any_notes ? kExitWarnings : kExitOk;
}

/// Loads either a dataset document or a predictions file as sentence
/// records. Predictions borrow sentence text from @p dataset_path when given.
std::vector<SentenceRecord> load_records(const std::string& path, const std::string& dataset_path) {
  const std::string text = io::read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  bool is_dataset = false;
  if (first != std::string::npos && text[first] == '{') {
    // A dataset is one JSON document with "records"; predictions are lines.
    is_dataset = text.find("\"records\"") != std::string::npos &&
                 text.find("\"tuples\"") == std::string::npos;
  }
  if (is_dataset) {
    try {
      return io::parse_dataset(text).records;
    } catch (const io::InputError& e) {
      throw io::InputError(path + ": " + e.what(), e.diagnostics());
    }
  }
  const io::PredictionsFile p = io::load_predictions_file(path);
  std::optional<io::DatasetFile> ds;
  if (!dataset_path.empty()) ds = io::load_dataset_file(dataset_path);
  std::vector<SentenceRecord> out;
  for (const io::PredictionRecord& r : p.records) {
    SentenceRecord rec;
    rec.id = r.id;
    if (ds) {
      const SentenceRecord* gold = ds->find(r.id);
      if (!gold) throw io::InputError("prediction id '" + r.id + "' is not in " + dataset_path);
      rec.text = gold->text;
      rec.domain = gold->domain;
    }
    rec.opinions = r.tuples;
    out.push_back(std::move(rec));
  }
  return out;
}

int cmd_kg(const Globals& g, const std::string& input, const std::string& format_name,
           const std::string& out_path, const std::string& dataset_path, bool no_schema,
           std::ostream& out, std::ostream& err) {
  const auto format = onto::parse_format(format_name);
  if (!format) throw io::InputError("unknown format '" + format_name + "'; see `uoce formats`");
  onto::InstanceNaming naming;
  if (!g.base_iri.empty()) naming.instance_base = g.base_iri;

  onto::Graph graph = no_schema ? onto::Graph{} : onto::build_uoc_schema(naming.schema_base);
  if (!g.base_iri.empty()) graph.bind_prefix("data", naming.instance_base);
  std::size_t skipped = 0, opinions = 0;
  for (const SentenceRecord& rec : load_records(input, dataset_path)) {
    for (std::size_t k = 0; k < rec.opinions.size(); ++k) {
      try {
        graph.merge(onto::instantiate_opinion(rec.opinions[k], rec, k, naming));
        ++opinions;
      } catch (const onto::InvalidTupleError& e) {
        ++skipped;
        err << "skipped: " << e.what() << "\n";
      }
    }
  }
  const std::string text = onto::serialize_graph(graph, *format);
  if (out_path.empty() || out_path == "-") out << text;
  else io::write_text_file(out_path, text);
  if (onto::format_is_lossy(*format)) {
    err << "warning: " << onto::format_name(*format)
        << " output is lossy: literal values other than names and definitions are omitted\n";
  }
  err << opinions << " opinions written, " << skipped << " skipped, " << graph.size() << " triples\n";
  if (skipped > 0 && !g.lenient) return kExitInputError;
  return kExitOk;
}

int cmd_formats(std::ostream& out) {
  std::string text;
  for (auto f : onto::kAllFormats) {
    std::string line = std::string(onto::format_name(f));
    line.resize(8, ' ');
    std::string title(onto::format_title(f));
    title.resize(24, ' ');
    std::string tags = onto::format_supports_parse(f) ? "read+write" : "write";
    if (onto::format_is_lossy(f)) tags += ", lossy";
    tags.resize(18, ' ');
    text += line + title + tags + std::string(onto::format_doc_url(f)) + "\n";
  }
  out << text;
  return kExitOk;
}

}  // namespace

SweepResult run_sweep(const RunConfig& cfg, const io::DatasetFile& ds,
                      const std::filesystem::path& out_dir, llm::ResponseCache& cache, bool strict) {
  SweepResult result;
  const std::vector<std::string> variants = sweep_variants(cfg);
  const prompt::PromptConfig base = make_prompt_config(cfg, ds);
  const metrics::Corpus gold = ds.corpus();

  result.report.columns = variants;
  std::set<std::string> dirs;
  for (const llm::ModelConfig& model : cfg.models) {
    result.report.rows.push_back(model.label());
    std::string dir = safe_dir_name(model.label());
    while (!dirs.insert(dir).second) dir += "_";
    auto backend = llm::make_backend(model);
    std::vector<SweepCell> row;
    for (const std::string& variant : variants) {
      SweepCell cell;
      llm::RunStats stats;
      try {
        const io::PredictionsFile p = llm::run_eval(ds, apply_variant(base, variant), model, *backend,
                                                    cache, llm::RunOptions{strict}, &stats);
        io::save_predictions_file(p, out_dir / dir / (variant + ".jsonl"));
        cell.f1 = metrics::score_task(gold, aligned_predictions(p, ds), cfg.task, cfg.metric).f1;
        if (stats.failed > 0) {
          cell.note = std::to_string(stats.failed) + " of " + std::to_string(stats.sentences) +
                      " requests failed";
        }
      } catch (const llm::RunError& e) {
        cell.note = e.what();
      }
      result.cache_hits += stats.cache_hits;
      if (!cell.note.empty()) result.any_notes = true;
      row.push_back(std::move(cell));
    }
    result.backend_requests += backend->request_count();
    result.report.cells.push_back(std::move(row));
  }
  return result;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Opinion extraction evaluation toolkit", "uoce"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--config", g.config, "Run configuration (JSON)");
  app.add_option("--cache", g.cache, "Reply cache file (JSON lines)");
  app.add_flag("--strict", g.strict, "Drop parsed tuples that raised any diagnostic");
  app.add_flag("--lenient", g.lenient, "Do not fail on skippable problems");
  app.add_option("--base-iri", g.base_iri, "Base IRI for knowledge-graph instances");
  app.add_flag("--csv", g.csv, "Write tables as CSV");

  std::string dataset, predictions, gold, task = "uoce", metric = "component", output, model_name,
                                         out_dir, input, format = "ttl", kg_dataset;
  bool no_schema = false;

  auto* validate = app.add_subcommand("validate", "Check a dataset (and optionally predictions)");
  validate->add_option("dataset", dataset, "Dataset JSON")->required();
  validate->add_option("--predictions", predictions, "Predictions JSONL to check against it");

  auto* stats = app.add_subcommand("stats", "Dataset characteristics");
  stats->add_option("dataset", dataset, "Dataset JSON")->required();

  auto* score = app.add_subcommand("score", "Score predictions against gold");
  score->add_option("gold", gold, "Gold dataset JSON")->required();
  score->add_option("predictions", predictions, "Predictions JSONL")->required();
  score->add_option("--task", task, "uoce, acos or aste")->capture_default_str();
  score->add_option("--metric", metric, "component or tuple")->capture_default_str();

  auto* run = app.add_subcommand("run", "Extract opinions with a model");
  run->add_option("dataset", dataset, "Dataset JSON")->required();
  run->add_option("-o,--output", output, "Predictions file (default stdout)");
  run->add_option("--model", model_name, "Model label from the config (default: first)");

  auto* sweep = app.add_subcommand("sweep", "Run and score every model x variant cell");
  sweep->add_option("dataset", dataset, "Dataset JSON")->required();
  sweep->add_option("--out-dir", out_dir, "Directory for per-cell predictions and the grid")->required();

  auto* kg = app.add_subcommand("kg", "Build the knowledge graph of gold or predicted opinions");
  kg->add_option("input", input, "Dataset JSON or predictions JSONL")->required();
  kg->add_option("-f,--format", format, "Serialization format")->capture_default_str();
  kg->add_option("-o,--output", output, "Output file (default stdout)");
  kg->add_option("--dataset", kg_dataset, "Dataset supplying sentence text for predictions");
  kg->add_flag("--no-schema", no_schema, "Write instance triples only");

  auto* formats = app.add_subcommand("formats", "List serialization formats");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate) return cmd_validate(g, dataset, predictions, out, err);
    if (*stats) return cmd_stats(g, dataset, out);
    if (*score) return cmd_score(g, gold, predictions, task, metric, out, err);
    if (*run) return cmd_run(g, dataset, output, model_name, out, err);
    if (*sweep) return cmd_sweep(g, dataset, out_dir, out, err);
    if (*kg) return cmd_kg(g, input, format, output, kg_dataset, no_schema, out, err);
    if (*formats) return cmd_formats(out);
  } catch (const io::InputError& e) {
    err << "error: " << e.what() << "\n";
    if (e.diagnostics().size() > 1) print_diagnostics(err, e.diagnostics());
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace uoce::cli
