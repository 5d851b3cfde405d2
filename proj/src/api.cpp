#include "petrikit/api.hpp"

#include <json.hpp>

#include "petrikit/formats.hpp"

namespace petrikit {

namespace {

using json = nlohmann::ordered_json;

ApiResponse ok(const json& body) { return {200, body.dump(), "application/json"}; }

ApiResponse failure(int status, std::string_view code, const std::string& message) {
  return {status, json{{"error", code}, {"message", message}}.dump(), "application/json"};
}

ApiResponse failure(int status, const Error& e) {
  json body{{"error", codeName(e.code())}, {"message", e.what()}};
  if (e.location().known()) {
    body["line"] = e.location().line;
    body["column"] = e.location().column;
  }
  return {status, body.dump(), "application/json"};
}

json stateJson(const Session& s) {
  const auto& net = s.net();
  json marking = json::object();
  for (std::size_t p = 0; p < net.placeCount(); ++p) {
    marking[net.placeName(PlaceId{p})] = s.marking()[PlaceId{p}];
  }
  return json{{"net", net.name()},
              {"places", net.placeNames()},
              {"transitions", net.transitionNames()},
              {"marking", std::move(marking)},
              {"history", namesOf(net, s.history())},
              {"enabled", namesOf(net, s.enabledNow())},
              {"deadlocked", s.deadlocked()}};
}

}  // namespace

Api::Api(PetriNet net, AnalysisOptions options) : session_(std::move(net)), options_(options) {}

ApiResponse Api::stateLocked() const { return ok(stateJson(session_)); }

ApiResponse Api::state() const {
  std::shared_lock lock(mutex_);
  return stateLocked();
}

ApiResponse Api::loadNet(std::string_view text) {
  try {
    PetriNet net = buildNet(parseNetText(text));
    std::unique_lock lock(mutex_);
    session_ = Session(std::move(net));
    {
      std::lock_guard cache(cacheMutex_);
      analysisCache_.reset();
    }
    return stateLocked();
  } catch (const Error& e) {
    return failure(400, e);
  }
}

ApiResponse Api::fire(std::string_view body) {
  std::string transition;
  try {
    auto parsed = json::parse(body);
    if (!parsed.is_object() || !parsed.contains("transition") || !parsed["transition"].is_string()) {
      return failure(400, "BadRequest", "expected {\"transition\": <id>}");
    }
    transition = parsed["transition"].get<std::string>();
  } catch (const json::exception& e) {
    return failure(400, "BadRequest", e.what());
  }

  std::unique_lock lock(mutex_);
  try {
    session_.fire(transition);
  } catch (const NotEnabledError& e) {
    json out{{"error", codeName(e.code())},
             {"message", e.what()},
             {"transition", e.transition()},
             {"deficient", e.deficientPlaces()}};
    return {409, out.dump(), "application/json"};
  } catch (const Error& e) {
    return failure(400, e);
  }
  return stateLocked();
}

ApiResponse Api::undo() {
  std::unique_lock lock(mutex_);
  session_.undo();
  return stateLocked();
}

ApiResponse Api::reset() {
  std::unique_lock lock(mutex_);
  session_.reset();
  return stateLocked();
}

ApiResponse Api::analysis() const {
  std::shared_lock lock(mutex_);
  std::lock_guard cache(cacheMutex_);
  if (!analysisCache_) {
    analysisCache_ = writeReport(petrikit::analyze(session_.net(), options_), ReportMode::Json);
  }
  return {200, *analysisCache_, "application/json"};
}

ApiResponse Api::dot(std::string_view kind) const {
  std::shared_lock lock(mutex_);
  const auto& net = session_.net();
  if (kind.empty() || kind == "net") {
    return ok(json{{"kind", "net"}, {"dot", writeDot(net)}});
  }
  if (kind == "reach") {
    const auto graph = explore(net, options_.maxStates);
    return ok(json{{"kind", "reach"}, {"truncated", graph.truncated}, {"dot", writeDot(graph, net)}});
  }
  return failure(400, "BadRequest", "kind must be 'net' or 'reach'");
}

ApiResponse Api::handle(std::string_view method, std::string_view path, std::string_view kind,
                        std::string_view body) {
  if (method == "GET") {
    if (path == "/api/state") return state();
    if (path == "/api/analysis") return analysis();
    if (path == "/api/dot") return dot(kind);
  } else if (method == "POST") {
    if (path == "/api/net") return loadNet(body);
    if (path == "/api/fire") return fire(body);
    if (path == "/api/undo") return undo();
    if (path == "/api/reset") return reset();
  }
  return failure(404, "NotFound", std::string(method) + " " + std::string(path));
}

}  // namespace petrikit
