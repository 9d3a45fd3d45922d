#include "pxc/core.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "pxc/hash.hpp"
#include "pxc/text.hpp"

namespace pxc {

namespace {

// RFC-4180 field splitting over a whole file: quoted fields may contain
// commas, escaped quotes (""), and newlines. Returns rows of fields; the
// row's 1-based starting line number rides along for error reporting.
struct CsvRow {
  std::vector<std::string> fields;
  size_t line_no = 0;
};

std::vector<CsvRow> parse_csv(const std::string& content) {
  std::vector<CsvRow> rows;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  size_t line = 1;
  size_t row_start_line = 1;

  auto end_field = [&] {
    fields.push_back(field);
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back({fields, row_start_line});
    fields.clear();
    row_start_line = line;
  };

  for (size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    if (c == '\n') ++line;
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field.empty() && !field_was_quoted) {
          in_quotes = true;
          field_was_quoted = true;
        } else {
          field.push_back(c);
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        break;
      default:
        field.push_back(c);
    }
  }
  if (!field.empty() || !fields.empty() || field_was_quoted) end_row();
  return rows;
}

std::string read_file_or_fail(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MissingFile, "cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Taxonomy::Taxonomy(std::string name, std::vector<GpcCategory> categories)
    : name_(std::move(name)), categories_(std::move(categories)) {
  if (categories_.empty()) {
    fail(ErrorCode::MalformedRow, "taxonomy has no categories");
  }
  for (size_t i = 0; i < categories_.size(); ++i) {
    GpcCategory& c = categories_[i];
    c.segment = text::trim(c.segment);
    c.family = text::trim(c.family);
    c.class_name = text::trim(c.class_name);
    c.brick = text::trim(c.brick);
    c.brick_code = text::trim(c.brick_code);
    if (c.segment.empty() || c.family.empty() || c.class_name.empty() ||
        c.brick.empty() || c.brick_code.empty()) {
      fail(ErrorCode::MalformedRow,
           "category " + std::to_string(i + 1) + " has an empty level name");
    }
    if (!by_code_.emplace(c.brick_code, i).second) {
      fail(ErrorCode::DuplicateBrickCode,
           "duplicate brick_code: " + c.brick_code);
    }
  }
}

bool Taxonomy::contains(std::string_view brick_code) const {
  return by_code_.count(std::string(brick_code)) > 0;
}

const GpcCategory* Taxonomy::find(std::string_view brick_code) const {
  auto it = by_code_.find(std::string(brick_code));
  return it == by_code_.end() ? nullptr : &categories_[it->second];
}

std::string primary_language(std::string_view tag) {
  size_t dash = tag.find('-');
  std::string_view primary =
      dash == std::string_view::npos ? tag : tag.substr(0, dash);
  return text::ascii_lower(primary);
}

Taxonomy load_taxonomy(const std::filesystem::path& path) {
  const std::string content = read_file_or_fail(path);
  const auto rows = parse_csv(content);
  if (rows.empty()) {
    fail(ErrorCode::MalformedRow, "taxonomy file is empty: " + path.string());
  }
  const std::vector<std::string> expected = {"segment", "family", "class",
                                             "brick", "brick_code"};
  if (rows[0].fields != expected) {
    fail(ErrorCode::MalformedRow,
         "line 1: header must be segment,family,class,brick,brick_code");
  }
  if (rows.size() == 1) {
    fail(ErrorCode::MalformedRow, "taxonomy has no data rows");
  }
  std::vector<GpcCategory> categories;
  std::unordered_set<std::string> seen;
  categories.reserve(rows.size() - 1);
  for (size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& row = rows[r];
    if (row.fields.size() != 5) {
      fail(ErrorCode::MalformedRow,
           "line " + std::to_string(row.line_no) + ": expected 5 fields, got " +
               std::to_string(row.fields.size()));
    }
    GpcCategory c{row.fields[0], row.fields[1], row.fields[2], row.fields[3],
                  row.fields[4]};
    if (text::trim(c.segment).empty() || text::trim(c.family).empty() ||
        text::trim(c.class_name).empty() || text::trim(c.brick).empty() ||
        text::trim(c.brick_code).empty()) {
      fail(ErrorCode::MalformedRow,
           "line " + std::to_string(row.line_no) + ": empty field");
    }
    if (!seen.insert(text::trim(c.brick_code)).second) {
      fail(ErrorCode::DuplicateBrickCode,
           "duplicate brick_code: " + text::trim(c.brick_code));
    }
    categories.push_back(std::move(c));
  }
  return Taxonomy(path.stem().string(), std::move(categories));
}

ProductRecord record_from_json_line(std::string_view line, size_t line_no) {
  nlohmann::ordered_json j =
      nlohmann::ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    fail(ErrorCode::MalformedLine,
         "line " + std::to_string(line_no) + ": not a JSON object");
  }
  ProductRecord rec;
  auto take_string = [&](const char* key, std::string& out, bool required) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) {
      if (required) {
        fail(ErrorCode::MalformedLine, "line " + std::to_string(line_no) +
                                           ": missing key '" + key + "'");
      }
      return;
    }
    if (!it->is_string()) {
      fail(ErrorCode::MalformedLine, "line " + std::to_string(line_no) +
                                         ": key '" + key +
                                         "' must be a string");
    }
    out = it->get<std::string>();
  };
  take_string("id", rec.id, true);
  take_string("name", rec.name, true);
  take_string("description", rec.description, false);
  take_string("shop", rec.shop, true);
  take_string("language", rec.language, true);
  take_string("category", rec.category, false);
  take_string("source_category", rec.source_category, false);
  rec.language = text::ascii_lower(rec.language);

  static const std::unordered_set<std::string> known = {
      "id",       "name",     "description", "shop",
      "language", "category", "source_category"};
  for (auto& [key, value] : j.items()) {
    if (!known.count(key)) rec.extras[key] = value;
  }

  if (text::trim(rec.id).empty()) {
    fail(ErrorCode::MalformedLine,
         "line " + std::to_string(line_no) + ": empty id");
  }
  if (text::trim(rec.name).empty()) {
    fail(ErrorCode::MalformedLine,
         "line " + std::to_string(line_no) + ": empty name");
  }
  return rec;
}

std::string record_to_json_line(const ProductRecord& record) {
  nlohmann::ordered_json j;
  j["id"] = record.id;
  j["name"] = record.name;
  j["description"] = record.description;
  j["shop"] = record.shop;
  j["language"] = record.language;
  if (!record.category.empty()) j["category"] = record.category;
  if (!record.source_category.empty()) {
    j["source_category"] = record.source_category;
  }
  for (auto& [key, value] : record.extras.items()) j[key] = value;
  return j.dump();
}

Dataset load_dataset(const std::filesystem::path& path, const Taxonomy* taxonomy,
                     bool strict) {
  const std::string content = read_file_or_fail(path);
  Dataset ds;
  ds.provenance = path.string();
  std::unordered_set<std::string> ids;
  size_t line_no = 0;
  size_t start = 0;
  while (start <= content.size()) {
    size_t end = content.find('\n', start);
    std::string_view line =
        end == std::string::npos
            ? std::string_view(content).substr(start)
            : std::string_view(content).substr(start, end - start);
    ++line_no;
    start = end == std::string::npos ? content.size() + 1 : end + 1;
    if (text::trim(line).empty()) continue;

    ProductRecord rec = record_from_json_line(line, line_no);
    if (!ids.insert(rec.id).second) {
      fail(ErrorCode::DuplicateId, "duplicate id: " + rec.id);
    }
    if (taxonomy && !rec.category.empty() && !taxonomy->contains(rec.category)) {
      if (strict) {
        fail(ErrorCode::UnknownCategory,
             "record '" + rec.id + "' has unknown category '" + rec.category +
                 "'");
      }
      ++ds.dropped_unknown_category;
      continue;
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

Dataset dataset_from_records(std::vector<ProductRecord> records,
                             std::string provenance) {
  std::unordered_set<std::string> ids;
  for (auto& rec : records) {
    if (text::trim(rec.id).empty()) {
      fail(ErrorCode::MalformedLine, "record with empty id");
    }
    if (text::trim(rec.name).empty()) {
      fail(ErrorCode::MalformedLine, "record '" + rec.id + "' has empty name");
    }
    if (!ids.insert(rec.id).second) {
      fail(ErrorCode::DuplicateId, "duplicate id: " + rec.id);
    }
    rec.language = text::ascii_lower(rec.language);
  }
  Dataset ds;
  ds.records = std::move(records);
  ds.provenance = std::move(provenance);
  return ds;
}

std::string dataset_to_jsonl(const Dataset& dataset) {
  std::string out;
  for (const ProductRecord& rec : dataset.records) {
    out += record_to_json_line(rec);
    out += '\n';
  }
  return out;
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  write_file_atomic(path, dataset_to_jsonl(dataset));
}

std::string dataset_fingerprint(const Dataset& dataset) {
  // XOR of per-record hashes keeps the fingerprint order-independent.
  uint64_t acc = 0x9ae16a3b2f90404full;
  for (const ProductRecord& rec : dataset.records) {
    uint64_t h = fnv1a64(rec.id);
    h = fnv1a64("\x1f", h);
    h = fnv1a64(rec.category, h);
    acc ^= h;
  }
  acc ^= fnv1a64(std::to_string(dataset.records.size()));
  char buf[17];
  snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(acc));
  return std::string(buf);
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::filesystem::path tmp =
      dir / (path.filename().string() + ".tmp" +
             std::to_string(static_cast<unsigned>(getpid())));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      fail(ErrorCode::MissingFile, "cannot write file: " + tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      fail(ErrorCode::MissingFile, "write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingFile: return "MissingFile";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::DuplicateBrickCode: return "DuplicateBrickCode";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NoProductFound: return "NoProductFound";
    case ErrorCode::EmptyName: return "EmptyName";
    case ErrorCode::InvalidUrl: return "InvalidUrl";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::TooManyRedirects: return "TooManyRedirects";
    case ErrorCode::HttpError: return "HttpError";
    case ErrorCode::BodyTooLarge: return "BodyTooLarge";
    case ErrorCode::NotHtml: return "NotHtml";
    case ErrorCode::SingleClassDataset: return "SingleClassDataset";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::MissingSourceCategory: return "MissingSourceCategory";
    case ErrorCode::GoldMissing: return "GoldMissing";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace pxc
