#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pxc/core.hpp"

// Deterministic generator of multilingual multi-shop labeled product
// corpora for tests and the acceptance suite. Token-based pseudo-languages;
// no external data.
namespace pxc::corpus {

struct CorpusSpec {
  int categories = 6;                     // k >= 2
  std::vector<std::string> shops;         // e.g. {"shopA", "shopB"}
  std::vector<std::string> languages;     // e.g. {"de", "fr"}
  int records_per_cell = 100;             // per (category, shop, language)
  double vocab_overlap = 0.7;             // in [0, 1]
  double noise_rate = 0.0;                // fraction of flipped labels
  uint64_t seed = 42;
};

struct NoiseEntry {
  std::string id;
  std::string original_label;  // generative brick_code
  std::string stored_label;    // flipped label written to the dataset
};

struct GeneratedCorpus {
  Dataset dataset;  // k * |shops| * |languages| * n records
  std::vector<NoiseEntry> noise_mask;  // exactly floor(noise_rate * size)
  Taxonomy taxonomy;
};

// Each category owns a base token pool; the per-(shop, language) variant
// takes a vocab_overlap fraction from that base, half the remainder from a
// shop-specific pool (shared across that shop's languages) and half from a
// pool private to the (shop, language) pair. vocab_overlap = 1 makes every
// variant identical; 0 leaves no cross-shop signal.
GeneratedCorpus generate(const CorpusSpec& spec);

struct AliasSpec {
  int source_categories = 46;
  int records_per_source = 12;
  uint64_t seed = 7;
};

struct AliasCorpus {
  Dataset dataset;  // source_category set, category unset
  std::map<std::string, std::string> gold;  // source category -> brick_code
};

// Records drawn from the base corpus' generative pools but labeled with
// renamed/merged source categories (several sources per target brick).
AliasCorpus generate_alias_dataset(const CorpusSpec& base,
                                   const AliasSpec& alias);

nlohmann::json noise_mask_to_json(const std::vector<NoiseEntry>& mask);
std::string taxonomy_to_csv(const Taxonomy& taxonomy);

}  // namespace pxc::corpus
