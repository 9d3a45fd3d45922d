#include "pxc/html.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

#include "pxc/text.hpp"

namespace pxc::html {

namespace {

const std::unordered_set<std::string>& void_elements() {
  static const std::unordered_set<std::string> set = {
      "area",  "base", "br",    "col",  "embed",  "hr",    "img", "input",
      "link",  "meta", "param", "source", "track", "wbr"};
  return set;
}

bool is_raw_text(const std::string& tag) {
  return tag == "script" || tag == "style";
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
         c == ':';
}

struct Parser {
  std::string_view in;
  size_t i = 0;

  bool eof() const { return i >= in.size(); }
  char peek(size_t ahead = 0) const {
    return i + ahead < in.size() ? in[i + ahead] : '\0';
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(in[i]))) ++i;
  }

  std::string read_name() {
    std::string name;
    while (!eof() && is_name_char(in[i])) name.push_back(in[i++]);
    return text::ascii_lower(name);
  }

  // Parses attributes up to '>' (or EOF). Returns true if the tag was
  // self-closing.
  bool read_attrs(std::vector<std::pair<std::string, std::string>>& attrs) {
    bool self_closing = false;
    while (!eof()) {
      skip_ws();
      if (eof()) break;
      char c = in[i];
      if (c == '>') {
        ++i;
        return self_closing;
      }
      if (c == '/') {
        self_closing = true;
        ++i;
        continue;
      }
      // Attribute name: anything up to ws, '=', '/', '>'.
      std::string name;
      while (!eof() && !std::isspace(static_cast<unsigned char>(in[i])) &&
             in[i] != '=' && in[i] != '/' && in[i] != '>') {
        name.push_back(in[i++]);
      }
      if (name.empty()) {
        ++i;  // stray character
        continue;
      }
      name = text::ascii_lower(name);
      skip_ws();
      std::string value;
      if (!eof() && in[i] == '=') {
        ++i;
        skip_ws();
        if (!eof() && (in[i] == '"' || in[i] == '\'')) {
          char quote = in[i++];
          size_t end = in.find(quote, i);
          if (end == std::string_view::npos) {
            value = std::string(in.substr(i));
            i = in.size();
          } else {
            value = std::string(in.substr(i, end - i));
            i = end + 1;
          }
        } else {
          while (!eof() && !std::isspace(static_cast<unsigned char>(in[i])) &&
                 in[i] != '>') {
            value.push_back(in[i++]);
          }
        }
      }
      attrs.emplace_back(std::move(name), text::decode_entities(value));
    }
    return self_closing;
  }
};

Node* append_child(Node* parent, std::unique_ptr<Node> child) {
  child->parent = parent;
  parent->children.push_back(std::move(child));
  return parent->children.back().get();
}

void append_text(Node* parent, std::string_view text) {
  if (text.empty()) return;
  auto node = std::make_unique<Node>();
  node->kind = Node::Kind::Text;
  node->text = std::string(text);
  append_child(parent, std::move(node));
}

// Case-insensitive search for "</tag" starting at pos.
size_t find_close_tag(std::string_view in, size_t pos, const std::string& tag) {
  const std::string needle = "</" + tag;
  while (pos + needle.size() <= in.size()) {
    size_t lt = in.find("</", pos);
    if (lt == std::string_view::npos) return std::string_view::npos;
    if (lt + needle.size() <= in.size()) {
      bool match = true;
      for (size_t k = 2; k < needle.size(); ++k) {
        if (std::tolower(static_cast<unsigned char>(in[lt + k])) != needle[k]) {
          match = false;
          break;
        }
      }
      if (match) return lt;
    }
    pos = lt + 2;
  }
  return std::string_view::npos;
}

}  // namespace

const std::string* Node::attr(std::string_view name) const {
  for (const auto& [n, v] : attrs) {
    if (n == name) return &v;
  }
  return nullptr;
}

bool Node::has_attr(std::string_view name) const {
  return attr(name) != nullptr;
}

std::unique_ptr<Node> parse(std::string_view html) {
  auto root = std::make_unique<Node>();
  root->kind = Node::Kind::Document;
  std::vector<Node*> stack = {root.get()};
  Parser p{html};

  while (!p.eof()) {
    if (p.peek() != '<') {
      size_t lt = html.find('<', p.i);
      size_t end = lt == std::string_view::npos ? html.size() : lt;
      append_text(stack.back(), html.substr(p.i, end - p.i));
      p.i = end;
      continue;
    }
    // Comment / doctype / processing instruction.
    if (p.peek(1) == '!') {
      if (p.peek(2) == '-' && p.peek(3) == '-') {
        size_t end = html.find("-->", p.i + 4);
        p.i = end == std::string_view::npos ? html.size() : end + 3;
      } else {
        size_t end = html.find('>', p.i);
        p.i = end == std::string_view::npos ? html.size() : end + 1;
      }
      continue;
    }
    if (p.peek(1) == '?') {
      size_t end = html.find('>', p.i);
      p.i = end == std::string_view::npos ? html.size() : end + 1;
      continue;
    }
    // Close tag.
    if (p.peek(1) == '/') {
      p.i += 2;
      std::string name = p.read_name();
      size_t end = html.find('>', p.i);
      p.i = end == std::string_view::npos ? html.size() : end + 1;
      if (name.empty()) continue;
      // Pop to the matching open element; an unmatched close tag is
      // ignored.
      for (size_t d = stack.size(); d > 1; --d) {
        if (stack[d - 1]->tag == name) {
          stack.resize(d - 1);
          break;
        }
      }
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(p.peek(1)))) {
      append_text(stack.back(), html.substr(p.i, 1));  // literal '<'
      ++p.i;
      continue;
    }
    // Open tag.
    ++p.i;
    auto element = std::make_unique<Node>();
    element->kind = Node::Kind::Element;
    element->tag = p.read_name();
    bool self_closing = p.read_attrs(element->attrs);
    std::string tag = element->tag;
    Node* placed = append_child(stack.back(), std::move(element));
    if (self_closing || void_elements().count(tag)) continue;
    if (is_raw_text(tag)) {
      size_t close = find_close_tag(html, p.i, tag);
      size_t text_end = close == std::string_view::npos ? html.size() : close;
      append_text(placed, html.substr(p.i, text_end - p.i));
      if (close == std::string_view::npos) {
        p.i = html.size();
      } else {
        size_t gt = html.find('>', close);
        p.i = gt == std::string_view::npos ? html.size() : gt + 1;
      }
      continue;
    }
    stack.push_back(placed);
  }
  return root;
}

namespace {

void collect_text(const Node& node, std::string& out) {
  if (node.kind == Node::Kind::Text) {
    out += node.text;
    return;
  }
  if (node.kind == Node::Kind::Element && is_raw_text(node.tag)) return;
  for (const auto& child : node.children) collect_text(*child, out);
}

void visit_elements(const Node& node,
                    const std::function<void(const Node&)>& fn) {
  if (node.kind == Node::Kind::Element) fn(node);
  for (const auto& child : node.children) visit_elements(*child, fn);
}

}  // namespace

std::string text_content(const Node& node) {
  std::string out;
  collect_text(node, out);
  return out;
}

void for_each_element(const Node& root,
                      const std::function<void(const Node&)>& fn) {
  visit_elements(root, fn);
}

}  // namespace pxc::html
