#include <httplib.h>

#include "petrikit/api.hpp"

namespace petrikit {

namespace {

constexpr const char* kPlaceholderPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>petrikit</title></head>
<body>
<h1>petrikit</h1>
<p>No web UI assets were given (start with <code>--web-root DIR</code>).
The JSON interface is live:</p>
<ul>
<li><a href="/api/state">GET /api/state</a></li>
<li><a href="/api/analysis">GET /api/analysis</a></li>
<li><a href="/api/dot?kind=net">GET /api/dot?kind=net</a></li>
<li>POST /api/net, /api/fire, /api/undo, /api/reset</li>
</ul>
</body></html>
)";

}  // namespace

struct HttpServer::Impl {
  Api& api;
  ServeOptions options;
  httplib::Server server;

  Impl(Api& a, ServeOptions o) : api(a), options(std::move(o)) {
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
      const std::string kind = req.has_param("kind") ? req.get_param_value("kind") : "";
      const ApiResponse out = api.handle(req.method, req.path, kind, req.body);
      res.status = out.status;
      res.set_content(out.body, out.contentType);
    };
    for (const char* path : {"/api/state", "/api/analysis", "/api/dot"}) server.Get(path, route);
    for (const char* path : {"/api/net", "/api/fire", "/api/undo", "/api/reset"}) {
      server.Post(path, route);
    }
    const bool mounted =
        options.webRoot && server.set_mount_point("/", options.webRoot->string());
    if (!mounted) {
      server.Get("/", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(kPlaceholderPage, "text/html");
      });
    }
  }
};

HttpServer::HttpServer(Api& api, ServeOptions options)
    : impl_(std::make_unique<Impl>(api, std::move(options))) {}

HttpServer::~HttpServer() = default;

int HttpServer::bind() {
  auto& o = impl_->options;
  if (o.port == 0) {
    o.port = impl_->server.bind_to_any_port(o.host);
    return o.port;
  }
  return impl_->server.bind_to_port(o.host, o.port) ? o.port : -1;
}

bool HttpServer::run() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

bool serve(Api& api, const ServeOptions& options) {
  HttpServer server(api, options);
  if (server.bind() < 0) return false;
  return server.run();
}

}  // namespace petrikit
