#pragma once

#include <chrono>
#include <cstddef>
#include <string>

#include "pxc/error.hpp"

// Single-URL HTML download for the demo/service path. Stateless client, no
// cookies, no crawling.
namespace pxc::fetch {

struct FetchConfig {
  double timeout_s = 10.0;
  size_t max_bytes = 5 * 1024 * 1024;
  int max_redirects = 5;
  std::string user_agent;  // defaulted in the constructor
  bool force = false;      // return non-HTML bodies instead of NotHtml

  FetchConfig();
  // Applies PRODUCT_EXTRACT_TIMEOUT_S / PRODUCT_EXTRACT_MAX_BYTES overrides.
  static FetchConfig from_env();
};

struct FetchedDocument {
  std::string requested_url;
  std::string final_url;  // after redirects
  int status = 0;         // 2xx
  std::string content_type;
  std::string body;  // decoded to UTF-8
  std::chrono::system_clock::time_point fetched_at;
};

// Follows <= max_redirects redirects; decodes the body using the
// Content-Type charset, then a <meta charset> prescan, then UTF-8 with
// replacement characters. Honors http_proxy/https_proxy conventions.
// Throws InvalidUrl, Timeout, TooManyRedirects, HttpError, BodyTooLarge,
// NotHtml.
FetchedDocument fetch(const std::string& url, const FetchConfig& config);

struct ParsedUrl {
  std::string scheme;  // "http" or "https"
  std::string host;
  int port = 0;
  std::string target;  // path + query, always starting with '/'
};

ParsedUrl parse_url(const std::string& url);  // throws InvalidUrl
std::string resolve_location(const ParsedUrl& base, const std::string& location);

// Charset from Content-Type header, else <meta> prescan of the first KiB,
// else UTF-8 with replacement. Supports utf-8, iso-8859-1, windows-1252,
// us-ascii; anything else falls back to lossy UTF-8.
std::string decode_body(const std::string& raw, const std::string& content_type);

}  // namespace pxc::fetch
