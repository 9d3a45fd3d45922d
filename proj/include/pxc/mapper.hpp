#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pxc/classifier.hpp"
#include "pxc/core.hpp"

// Source-to-target taxonomy mapping: classify foreign-taxonomy records with
// a model trained on the target taxonomy and take per-source-category
// majority votes.
namespace pxc::mapper {

struct MappingEntry {
  std::string target;  // brick_code
  size_t votes = 0;
  size_t total = 0;
  double margin = 0;  // votes / total
  std::optional<std::pair<std::string, size_t>> runner_up;
};

struct TaxonomyMapping {
  std::map<std::string, MappingEntry> entries;  // source category -> entry
  // Source categories below min_support or min_margin, with record counts.
  std::vector<std::pair<std::string, size_t>> unmapped;
};

struct MapConfig {
  size_t min_support = 5;
  double min_margin = 0.0;
};

// Every record needs a non-empty source_category. Vote ties break on higher
// mean confidence among the tied labels, then on the lexicographically
// smaller brick code.
TaxonomyMapping map_taxonomies(const classifier::Model& model,
                               const Dataset& source_records,
                               const MapConfig& config);

struct MappingScore {
  size_t correct = 0;
  size_t total = 0;
  double fraction = 0;  // 0 when total is 0 (warning)
  bool empty_warning = false;
};

// Scores mapped entries against a gold source->brick_code map; unmapped
// categories are excluded. Throws GoldMissing when gold lacks a scored
// entry.
MappingScore mapping_accuracy(const TaxonomyMapping& mapping,
                              const std::map<std::string, std::string>& gold);

nlohmann::json mapping_to_json(const TaxonomyMapping& mapping);
std::map<std::string, std::string> load_gold_mapping(
    const std::filesystem::path& path);

}  // namespace pxc::mapper
