#pragma once

#include <memory>
#include <string>

#include "pxc/classifier.hpp"
#include "pxc/fetch.hpp"

namespace httplib {
class Server;
}

// HTTP classification service: POST /classify with {"url": ...} or
// {"html": ...}, GET /healthz. The model is immutable after load; requests
// are handled concurrently.
namespace pxc::server {

struct ServeConfig {
  std::string addr = "127.0.0.1";
  int port = 8080;
  int max_inflight_fetches = 8;  // cap on concurrent outbound fetches
  size_t max_request_bytes = 8 * 1024 * 1024;
  fetch::FetchConfig fetch;
};

class ClassifyService {
 public:
  ClassifyService(classifier::Model model, ServeConfig config);
  ~ClassifyService();

  ClassifyService(const ClassifyService&) = delete;
  ClassifyService& operator=(const ClassifyService&) = delete;

  // Registers /classify and /healthz on an externally owned server; used by
  // tests to run the service in-process on an ephemeral port.
  void install(httplib::Server& srv);

  // Binds config.addr:config.port and serves until the process ends.
  // Returns false if the bind fails.
  bool run();

  const classifier::Model& model() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace pxc::server
