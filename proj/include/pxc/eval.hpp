#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pxc/classifier.hpp"
#include "pxc/core.hpp"

// Transfer-scenario evaluation: filtered train/test splits over shops and
// languages, weighted F1 scoring, and report rendering.
namespace pxc::eval {

// Empty set = no constraint. Language entries are matched on the lowercased
// primary subtag.
struct Filter {
  std::set<std::string> shops;
  std::set<std::string> languages;

  bool matches(const ProductRecord& record) const;
};

struct ScenarioSpec {
  std::string name;
  Filter train_filter;
  Filter test_filter;
  double holdout_fraction = 0.2;  // used only when the selections overlap
};

ScenarioSpec scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioSpec& spec);
std::vector<ScenarioSpec> load_scenarios(const std::filesystem::path& path);

struct ClassScore {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  size_t support = 0;  // gold count
};

struct F1Result {
  double weighted_f1 = 0;
  std::map<std::string, ClassScore> per_class;
};

// Per-class F1 = 2PR/(P+R) weighted by gold support; any zero denominator
// contributes 0. Throws LengthMismatch / EmptyInput.
F1Result weighted_f1(const std::vector<std::string>& golds,
                     const std::vector<std::string>& preds);

struct SplitResult {
  Dataset train;
  Dataset test;
  size_t uncovered = 0;  // test records dropped for labels absent in train
};

// Disjoint by id, deterministic given seed. Overlapping selections are
// resolved by a stratified holdout of round(holdout_fraction * |overlap|)
// records (largest-remainder apportionment across labels).
SplitResult split(const Dataset& dataset, const ScenarioSpec& spec,
                  uint64_t seed);

struct EvalReport {
  ScenarioSpec scenario;
  std::map<std::string, ClassScore> per_class;
  double weighted_f1 = 0;
  std::map<std::pair<std::string, std::string>, size_t> confusion;  // (gold, pred)
  size_t train_size = 0;
  size_t test_size = 0;
  size_t uncovered = 0;
};

EvalReport run_scenario(const Dataset& dataset, const Taxonomy& taxonomy,
                        const ScenarioSpec& spec,
                        const classifier::TrainConfig& train_config);

enum class ReportFormat { Json, MarkdownTable };

nlohmann::json report_to_json(const EvalReport& report);
// Markdown: one row per scenario, one column per test shop, weighted F1 to
// three decimals, "-" for absent cells.
std::string render_report(const std::vector<EvalReport>& reports,
                          ReportFormat format);

}  // namespace pxc::eval
