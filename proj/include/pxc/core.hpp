#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "pxc/error.hpp"

namespace pxc {

// One GPC category: segment > family > class > brick. brick_code is the
// unique key and the classifier's label space.
struct GpcCategory {
  std::string segment;
  std::string family;
  std::string class_name;
  std::string brick;
  std::string brick_code;
};

class Taxonomy {
 public:
  // Validates: non-empty, unique brick codes, non-blank level names.
  Taxonomy(std::string name, std::vector<GpcCategory> categories);

  const std::string& name() const { return name_; }
  size_t size() const { return categories_.size(); }
  bool contains(std::string_view brick_code) const;
  const GpcCategory* find(std::string_view brick_code) const;
  const std::vector<GpcCategory>& categories() const { return categories_; }

 private:
  std::string name_;
  std::vector<GpcCategory> categories_;  // file order
  std::unordered_map<std::string, size_t> by_code_;
};

// One labeled product. category/source_category are empty strings when
// unset. extras holds unknown JSONL keys so round-trips are lossless.
struct ProductRecord {
  std::string id;
  std::string name;
  std::string description;
  std::string shop;
  std::string language;  // BCP-47-style tag, stored lowercased
  std::string category;  // brick_code
  std::string source_category;
  nlohmann::ordered_json extras = nlohmann::ordered_json::object();
};

struct Dataset {
  std::vector<ProductRecord> records;  // file order
  std::string provenance;
  size_t dropped_unknown_category = 0;  // lenient-mode drop count
};

// Lowercased primary subtag ("de-AT" -> "de"); comparisons between language
// tags go through this.
std::string primary_language(std::string_view tag);

// CSV with header `segment,family,class,brick,brick_code`, RFC-4180 quoting.
Taxonomy load_taxonomy(const std::filesystem::path& path);

// JSONL, one object per line. strict: unknown categories are an error.
// lenient: such records are dropped and counted. taxonomy may be null, in
// which case category labels are not validated at all.
Dataset load_dataset(const std::filesystem::path& path, const Taxonomy* taxonomy,
                     bool strict);

// In-memory construction with the same id/name validation as the loader.
Dataset dataset_from_records(std::vector<ProductRecord> records,
                             std::string provenance);

// Writer emits keys in the fixed order id, name, description, shop,
// language, category, source_category, then any extras; load-then-save is a
// fixed point.
std::string record_to_json_line(const ProductRecord& record);
ProductRecord record_from_json_line(std::string_view line, size_t line_no);
void save_dataset(const Dataset& dataset, const std::filesystem::path& path);
std::string dataset_to_jsonl(const Dataset& dataset);

// Order-independent hex fingerprint over (id, category) pairs; stamped into
// trained models.
std::string dataset_fingerprint(const Dataset& dataset);

// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace pxc
