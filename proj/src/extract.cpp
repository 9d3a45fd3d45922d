#include "pxc/extract.hpp"

#include <algorithm>

#include "pxc/html.hpp"
#include "pxc/text.hpp"

namespace pxc::extract {

namespace {

// "https://schema.org/Product", "http://schema.org/Product/", "Product" all
// reduce to the leaf type name.
std::string type_leaf(std::string_view value) {
  std::string v = text::trim(value);
  while (!v.empty() && v.back() == '/') v.pop_back();
  size_t slash = v.find_last_of("/#");
  if (slash != std::string::npos) v = v.substr(slash + 1);
  return v;
}

bool is_schema_org_url(std::string_view value) {
  std::string v = text::ascii_lower(text::trim(value));
  return v.rfind("http://schema.org/", 0) == 0 ||
         v.rfind("https://schema.org/", 0) == 0 ||
         v.rfind("http://www.schema.org/", 0) == 0 ||
         v.rfind("https://www.schema.org/", 0) == 0;
}

std::string json_scalar_to_text(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return v.dump();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return "";
}

// Depth-first walk of a JSON-LD value tree; every object carrying @type
// becomes one SchemaNode per type string.
void walk_json_ld(const nlohmann::json& value, std::vector<SchemaNode>& out) {
  if (value.is_array()) {
    for (const auto& item : value) walk_json_ld(item, out);
    return;
  }
  if (!value.is_object()) return;

  std::vector<std::string> types;
  if (auto it = value.find("@type"); it != value.end()) {
    if (it->is_string()) {
      types.push_back(type_leaf(it->get<std::string>()));
    } else if (it->is_array()) {
      for (const auto& t : *it) {
        if (t.is_string()) types.push_back(type_leaf(t.get<std::string>()));
      }
    }
  }

  std::vector<std::pair<std::string, std::string>> properties;
  for (const auto& [key, v] : value.items()) {
    if (!key.empty() && key[0] == '@') continue;
    if (v.is_array()) {
      for (const auto& item : v) {
        std::string s = json_scalar_to_text(item);
        if (!s.empty()) properties.emplace_back(key, s);
      }
    } else {
      std::string s = json_scalar_to_text(v);
      if (!s.empty()) properties.emplace_back(key, s);
    }
  }

  for (const std::string& t : types) {
    if (t.empty()) continue;
    SchemaNode node;
    node.node_type = t;
    node.properties = properties;
    out.push_back(std::move(node));
  }

  // Nested objects (and @graph) may hold further typed entities.
  for (const auto& [key, v] : value.items()) {
    if (v.is_object() || v.is_array()) {
      if (key == "@type") continue;
      walk_json_ld(v, out);
    }
  }
}

// Microdata property value per the HTML rules: URL-valued and data-valued
// elements read an attribute, everything else reads text content.
std::string microdata_value(const html::Node& el) {
  const std::string& tag = el.tag;
  auto attr_or_empty = [&](const char* name) {
    const std::string* v = el.attr(name);
    return v ? *v : std::string();
  };
  if (tag == "meta") return attr_or_empty("content");
  if (tag == "a" || tag == "area" || tag == "link") return attr_or_empty("href");
  if (tag == "img" || tag == "audio" || tag == "video" || tag == "embed" ||
      tag == "iframe" || tag == "source" || tag == "track") {
    return attr_or_empty("src");
  }
  if (tag == "object") return attr_or_empty("data");
  if (tag == "data" || tag == "meter") return attr_or_empty("value");
  if (tag == "time") {
    const std::string* dt = el.attr("datetime");
    if (dt) return *dt;
  }
  return text::decode_entities(html::text_content(el));
}

// Collects itemprop properties for the itemscope rooted at scope; descent
// stops at nested itemscopes, which become their own nodes.
void collect_properties(const html::Node& node, SchemaNode& out, bool is_root) {
  if (!is_root && node.kind == html::Node::Kind::Element) {
    if (const std::string* prop = node.attr("itemprop")) {
      if (!node.has_attr("itemscope")) {
        std::string value = microdata_value(node);
        // itemprop may carry several space-separated names.
        for (const std::string& name : text::tokenize_whitespace(*prop)) {
          out.properties.emplace_back(name, value);
        }
      }
      if (node.has_attr("itemscope")) return;  // separate item
    } else if (node.has_attr("itemscope")) {
      return;
    }
  }
  for (const auto& child : node.children) {
    collect_properties(*child, out, false);
  }
}

// Whitespace-normalize and entity-decode one extracted field.
std::string normalize_field(std::string_view raw, bool strip_tags) {
  std::string s = text::sanitize_utf8(raw);
  s = text::decode_entities(s);
  if (strip_tags) s = text::strip_markup(s);
  return text::collapse_whitespace(s);
}

struct Candidate {
  const SchemaNode* node;
  std::string name;  // normalized, non-empty
  size_t order;
};

}  // namespace

std::string_view syntax_name(Syntax s) {
  return s == Syntax::JsonLd ? "jsonld" : "microdata";
}

std::vector<std::string> SchemaNode::values(std::string_view prop) const {
  std::vector<std::string> out;
  for (const auto& [name, value] : properties) {
    if (name == prop) out.push_back(value);
  }
  return out;
}

const std::string* SchemaNode::first(std::string_view prop) const {
  for (const auto& [name, value] : properties) {
    if (name == prop) return &value;
  }
  return nullptr;
}

std::vector<SchemaNode> extract_json_ld(std::string_view html,
                                        std::vector<std::string>* warnings) {
  std::vector<SchemaNode> nodes;
  auto root = html::parse(html);
  size_t block_no = 0;
  html::for_each_element(*root, [&](const html::Node& el) {
    if (el.tag != "script") return;
    const std::string* type = el.attr("type");
    if (!type || text::ascii_lower(text::trim(*type)) != "application/ld+json") {
      return;
    }
    ++block_no;
    std::string payload;
    for (const auto& child : el.children) {
      if (child->kind == html::Node::Kind::Text) payload += child->text;
    }
    nlohmann::json parsed =
        nlohmann::json::parse(payload, nullptr, /*allow_exceptions=*/false);
    if (parsed.is_discarded()) {
      if (warnings) {
        warnings->push_back("json-ld block " + std::to_string(block_no) +
                            ": malformed JSON, skipped");
      }
      return;
    }
    walk_json_ld(parsed, nodes);
  });
  return nodes;
}

std::vector<SchemaNode> extract_microdata(std::string_view html) {
  std::vector<SchemaNode> nodes;
  auto root = html::parse(html);
  html::for_each_element(*root, [&](const html::Node& el) {
    if (!el.has_attr("itemscope")) return;
    const std::string* itemtype = el.attr("itemtype");
    if (!itemtype) return;
    // itemtype may list several space-separated URLs; first schema.org one
    // wins.
    std::string node_type;
    for (const std::string& url : text::tokenize_whitespace(*itemtype)) {
      if (is_schema_org_url(url)) {
        node_type = type_leaf(url);
        break;
      }
    }
    if (node_type.empty()) return;
    SchemaNode node;
    node.node_type = node_type;
    collect_properties(el, node, true);
    nodes.push_back(std::move(node));
  });
  return nodes;
}

ProductInfo extract_product(std::string_view html,
                            std::vector<std::string>* warnings) {
  const std::vector<SchemaNode> json_ld = extract_json_ld(html, warnings);
  const std::vector<SchemaNode> microdata = extract_microdata(html);

  std::vector<const SchemaNode*> jsonld_products;
  std::vector<const SchemaNode*> microdata_products;
  for (const SchemaNode& n : json_ld) {
    if (n.node_type == "Product") jsonld_products.push_back(&n);
  }
  for (const SchemaNode& n : microdata) {
    if (n.node_type == "Product") microdata_products.push_back(&n);
  }
  const int candidate_count =
      static_cast<int>(jsonld_products.size() + microdata_products.size());
  if (candidate_count == 0) {
    fail(ErrorCode::NoProductFound, "no schema.org Product entity in page");
  }

  auto usable = [](const std::vector<const SchemaNode*>& products) {
    std::vector<Candidate> out;
    for (size_t i = 0; i < products.size(); ++i) {
      const std::string* raw = products[i]->first("name");
      if (!raw) continue;
      std::string name = normalize_field(*raw, /*strip_tags=*/false);
      if (name.empty()) continue;
      out.push_back({products[i], std::move(name), i});
    }
    return out;
  };

  std::vector<Candidate> candidates = usable(jsonld_products);
  Syntax syntax = Syntax::JsonLd;
  if (candidates.empty()) {
    candidates = usable(microdata_products);
    syntax = Syntax::Microdata;
  }
  if (candidates.empty()) {
    fail(ErrorCode::EmptyName, "Product entity found but no usable name");
  }

  // Most populated properties wins; ties resolve to document order.
  const Candidate* best = &candidates[0];
  for (const Candidate& c : candidates) {
    if (c.node->property_count() > best->node->property_count()) best = &c;
  }

  ProductInfo info;
  info.syntax = syntax;
  info.candidate_count = candidate_count;
  info.name = best->name;
  if (const std::string* desc = best->node->first("description")) {
    info.description =
        text::truncate_chars(normalize_field(*desc, /*strip_tags=*/true),
                             kMaxDescriptionChars);
  }
  return info;
}

nlohmann::json product_info_to_json(const ProductInfo& info) {
  nlohmann::json j;
  j["name"] = info.name;
  j["description"] = info.description;
  j["syntax"] = std::string(syntax_name(info.syntax));
  j["candidate_count"] = info.candidate_count;
  return j;
}

}  // namespace pxc::extract
