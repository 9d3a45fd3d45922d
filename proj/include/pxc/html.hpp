#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

// Forgiving HTML tree builder: no DTD validation, unclosed and misnested
// tags are tolerated, script/style bodies are kept as raw text. Just enough
// structure for microdata and JSON-LD script extraction.
namespace pxc::html {

struct Node {
  enum class Kind { Document, Element, Text };

  Kind kind = Kind::Document;
  std::string tag;  // lowercased element name
  // Attribute names lowercased, values entity-decoded.
  std::vector<std::pair<std::string, std::string>> attrs;
  std::string text;  // Text nodes only; raw (entities not decoded)
  std::vector<std::unique_ptr<Node>> children;
  Node* parent = nullptr;

  const std::string* attr(std::string_view name) const;
  bool has_attr(std::string_view name) const;
};

std::unique_ptr<Node> parse(std::string_view html);

// Concatenated descendant text, script/style subtrees excluded.
std::string text_content(const Node& node);

// Pre-order element visit (document order).
void for_each_element(const Node& root,
                      const std::function<void(const Node&)>& fn);

}  // namespace pxc::html
