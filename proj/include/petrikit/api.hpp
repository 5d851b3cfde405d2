#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "petrikit/report.hpp"
#include "petrikit/session.hpp"

namespace petrikit {

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string contentType = "application/json";
};

/// JSON endpoints of the serve mode, independent of any HTTP library. One
/// session per instance; mutating calls are serialized, reads run shared.
class Api {
 public:
  explicit Api(PetriNet net = {}, AnalysisOptions options = {});

  ApiResponse loadNet(std::string_view text);  // POST /api/net
  ApiResponse state() const;                   // GET  /api/state
  ApiResponse fire(std::string_view body);     // POST /api/fire {"transition": id}
  ApiResponse undo();                          // POST /api/undo
  ApiResponse reset();                         // POST /api/reset
  ApiResponse analysis() const;                // GET  /api/analysis
  ApiResponse dot(std::string_view kind) const;  // GET /api/dot?kind=net|reach

  /// Routes a request by method and path; 404 for anything else.
  ApiResponse handle(std::string_view method, std::string_view path, std::string_view kind,
                     std::string_view body);

 private:
  ApiResponse stateLocked() const;

  mutable std::shared_mutex mutex_;
  Session session_;
  AnalysisOptions options_;
  mutable std::mutex cacheMutex_;
  mutable std::optional<std::string> analysisCache_;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::filesystem::path> webRoot;
};

/// HTTP front of an Api. Static web UI assets are served from webRoot at
/// "/" when given, otherwise a placeholder page.
class HttpServer {
 public:
  HttpServer(Api& api, ServeOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the configured port, or any free port when it is 0. Returns the
  /// bound port, or -1 on failure.
  int bind();
  /// Blocks until stop() is called from another thread.
  bool run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving HTTP until the process is stopped. Returns false when the
/// socket cannot be bound.
bool serve(Api& api, const ServeOptions& options);

}  // namespace petrikit
