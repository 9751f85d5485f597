#include "uoce/llm/run_eval.hpp"

#include <algorithm>
#include <thread>

#include "uoce/llm/complete.hpp"
#include "uoce/llm/parse_output.hpp"

namespace uoce::llm {

io::PredictionsFile run_eval(const io::DatasetFile& ds, const prompt::PromptConfig& prompt_cfg,
                             const ModelConfig& model_cfg, ChatBackend& backend,
                             ResponseCache& cache, const RunOptions& options, RunStats* stats) {
  model_cfg.validate();
  const std::size_t n = ds.records.size();
  io::PredictionsFile out;
  out.records.resize(n);

  // Prompts are built up front so configuration errors surface before any
  // request is sent.
  std::vector<prompt::PromptText> prompts;
  prompts.reserve(n);
  for (const SentenceRecord& r : ds.records) prompts.push_back(prompt::build_prompt(prompt_cfg, r.text));

  CallCounters counters;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> failed{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const SentenceRecord& rec = ds.records[i];
      io::PredictionRecord& pr = out.records[i];
      pr.id = rec.id;
      try {
        std::string raw = complete(prompts[i], model_cfg, backend, cache, &counters);
        ParsedOutput parsed =
            parse_model_output(raw, ParseOptions{options.strict, std::string_view(rec.text)});
        pr.tuples = std::move(parsed.tuples);
        pr.diagnostics = std::move(parsed.diagnostics);
        pr.raw = std::move(raw);
      } catch (const std::exception& e) {
        ++failed;
        pr.diagnostics.push_back({Severity::Error, "request-failed", e.what(), rec.id});
      }
    }
  };

  const std::size_t threads = std::min(model_cfg.max_concurrency, std::max<std::size_t>(n, 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  if (stats) {
    stats->sentences = n;
    stats->cache_hits = counters.cache_hits;
    stats->backend_calls = counters.attempts;
    stats->failed = failed;
  }
  if (n > 0 && failed == n) {
    std::string first;
    for (const auto& d : out.records.front().diagnostics) first = d.message;
    throw RunError("every request failed for model '" + model_cfg.label() + "': " + first);
  }
  return out;
}

}  // namespace uoce::llm
