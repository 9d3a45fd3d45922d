#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pxc/error.hpp"

// schema.org Product extraction from HTML via JSON-LD and microdata.
namespace pxc::extract {

enum class Syntax { JsonLd, Microdata };

std::string_view syntax_name(Syntax s);  // "jsonld" / "microdata"

// Intermediate representation: one typed schema.org entity.
struct SchemaNode {
  std::string node_type;  // leaf type name, e.g. "Product"
  // Property multimap in document order; values are raw (not yet normalized).
  std::vector<std::pair<std::string, std::string>> properties;

  std::vector<std::string> values(std::string_view prop) const;
  const std::string* first(std::string_view prop) const;
  size_t property_count() const { return properties.size(); }
};

struct ProductInfo {
  std::string name;
  std::string description;  // possibly empty
  Syntax syntax = Syntax::JsonLd;
  int candidate_count = 0;  // Product entities found in the page
};

// Descriptions are truncated to this many codepoints to bound classifier
// input.
inline constexpr size_t kMaxDescriptionChars = 10000;

// All schema.org-typed nodes from <script type="application/ld+json">
// blocks. Recurses into @graph, top-level arrays, and nested objects; @type
// arrays contribute one node per type string. Malformed blocks are skipped;
// a note per skipped block lands in *warnings when given.
std::vector<SchemaNode> extract_json_ld(std::string_view html,
                                        std::vector<std::string>* warnings = nullptr);

// All itemscope elements whose itemtype URL path ends in a schema.org type.
// Nested itemscopes are separate nodes and do not leak properties upward.
std::vector<SchemaNode> extract_microdata(std::string_view html);

// Product selection: JSON-LD beats microdata; within the winning syntax the
// candidate with the most populated properties wins (tie: document order).
// Throws NoProductFound / EmptyName.
ProductInfo extract_product(std::string_view html,
                            std::vector<std::string>* warnings = nullptr);

// Canonical JSON rendering used by the CLI and the golden fixtures
// (alphabetical keys, compact).
nlohmann::json product_info_to_json(const ProductInfo& info);

}  // namespace pxc::extract
