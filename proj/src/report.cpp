#include "petrikit/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace petrikit {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

double millisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json bigToJson(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return json(v.convert_to<std::uint64_t>());
  }
  return json(v.str());
}

json nameList(const std::vector<std::string>& names) { return json(names); }

template <class T>
json matrixRows(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json semiflowJson(const Semiflow& s, const std::vector<std::string>& names) {
  json support = json::array();
  json coeffs = json::array();
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    coeffs.push_back(bigToJson(s.coeffs[i]));
    if (s.coeffs[i] != 0) support.push_back(names[i]);
  }
  return json{{"support", std::move(support)}, {"coefficients", std::move(coeffs)}};
}

double rounded(double ms) { return std::round(ms * 1000.0) / 1000.0; }

json toJson(const AnalysisReport& r, const ReportStyle& style) {
  const auto& net = r.net;
  json out;

  json places = json::array();
  for (std::size_t p = 0; p < net.placeCount(); ++p) {
    places.push_back({{"id", net.placeName(PlaceId{p})},
                      {"tokens", net.initialMarking()[PlaceId{p}]}});
  }
  json arcs = json::array();
  for (const auto& a : net.arcs()) {
    arcs.push_back({{"source", net.nodeName(a.source)},
                    {"target", net.nodeName(a.target)},
                    {"weight", a.weight}});
  }
  out["net"] = {{"name", net.name()},
                {"places", std::move(places)},
                {"transitions", nameList(net.transitionNames())},
                {"arcs", std::move(arcs)},
                {"enabled", nameList(namesOf(net, r.initiallyEnabled))}};

  out["incidence"] = {{"places", nameList(net.placeNames())},
                      {"transitions", nameList(net.transitionNames())},
                      {"forward", matrixRows(r.incidence.forward)},
                      {"backward", matrixRows(r.incidence.backward)},
                      {"combined", matrixRows(r.incidence.combined)}};

  json pflows = json::array();
  for (const auto& s : r.pInvariants) pflows.push_back(semiflowJson(s, net.placeNames()));
  out["pInvariants"] = std::move(pflows);

  json equations = json::array();
  for (const auto& eq : r.equations) {
    json terms = json::array();
    for (std::size_t p = 0; p < eq.coeffs.size(); ++p) {
      if (eq.coeffs[p] == 0) continue;
      terms.push_back({{"place", net.placeName(PlaceId{p})}, {"coefficient", bigToJson(eq.coeffs[p])}});
    }
    equations.push_back({{"text", formatEquation(net, eq)},
                         {"terms", std::move(terms)},
                         {"constant", bigToJson(eq.constant)}});
  }
  out["equations"] = std::move(equations);

  json tflows = json::array();
  for (const auto& s : r.tInvariants) tflows.push_back(semiflowJson(s, net.transitionNames()));
  out["tInvariants"] = std::move(tflows);

  out["coverage"] = {{"covered", r.coverage.covered},
                     {"uncoveredPlaces", nameList(namesOf(net, r.coverage.uncoveredPlaces))},
                     {"structurallyBounded", r.coverage.structurallyBounded()},
                     {"conservative", r.coverage.conservative()}};

  const auto& ss = r.stateSpace;
  json bounds = json::object();
  for (std::size_t p = 0; p < ss.boundedness.bounds.size(); ++p) {
    const auto& b = ss.boundedness.bounds[p];
    bounds[net.placeName(PlaceId{p})] = b ? json(*b) : json(nullptr);
  }
  json witness = nullptr;
  if (ss.safeness.witness) {
    witness = {{"place", net.placeName(*ss.safeness.witness)},
               {"bound", ss.safeness.witnessBound ? json(*ss.safeness.witnessBound) : json(nullptr)}};
  }
  json deadlock = nullptr;
  json path = nullptr;
  if (ss.deadlockPath) {
    deadlock = true;
    path = nameList(namesOf(net, *ss.deadlockPath));
  } else if (ss.explored) {
    deadlock = false;
  }
  out["stateSpace"] = {
      {"bounded", ss.boundedness.bounded},
      {"unboundedPlaces", nameList(namesOf(net, ss.boundedness.unboundedPlaces))},
      {"bounds", std::move(bounds)},
      {"safe", ss.safeness.safe},
      {"unsafeWitness", std::move(witness)},
      {"explored", ss.explored},
      {"maxStates", ss.maxStates},
      {"stateCount", ss.stateCount},
      {"edgeCount", ss.edgeCount},
      {"deadlock", std::move(deadlock)},
      {"deadlockPath", std::move(path)},
      {"deadTransitions",
       ss.explored ? nameList(namesOf(net, ss.deadTransitions)) : json(nullptr)},
  };

  if (style.includeTimings) {
    out["timings"] = {{"netBuildMs", rounded(r.timings.netBuildMs)},
                      {"invariantsMs", rounded(r.timings.invariantsMs)},
                      {"reachabilityMs", rounded(r.timings.reachabilityMs)},
                      {"totalMs", rounded(r.timings.totalMs)}};
  } else {
    out["timings"] = nullptr;
  }
  return out;
}

// Right-aligned table with a header row and a label column.
void writeTable(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::string>& labels,
                const std::vector<std::vector<std::string>>& cells) {
  std::size_t labelWidth = 0;
  for (const auto& l : labels) labelWidth = std::max(labelWidth, l.size());
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
    for (const auto& row : cells) widths[c] = std::max(widths[c], row[c].size());
  }
  auto pad = [&](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  out << std::string(labelWidth, ' ');
  for (std::size_t c = 0; c < header.size(); ++c) out << ' ' << pad(header[c], widths[c]);
  out << '\n';
  for (std::size_t r = 0; r < labels.size(); ++r) {
    out << labels[r] << std::string(labelWidth - labels[r].size(), ' ');
    for (std::size_t c = 0; c < header.size(); ++c) out << ' ' << pad(cells[r][c], widths[c]);
    out << '\n';
  }
}

template <class T>
void writeMatrix(std::ostream& out, const PetriNet& net, const Matrix<T>& m) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) cells[r][c] = std::to_string(m(r, c));
  }
  writeTable(out, net.transitionNames(), net.placeNames(), cells);
}

std::string joinNames(const std::vector<std::string>& names, const char* empty) {
  if (names.empty()) return empty;
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

void writeSemiflows(std::ostream& out, const std::vector<Semiflow>& flows,
                    const std::vector<std::string>& names) {
  if (flows.empty()) {
    out << "(none)\n";
    return;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    labels.push_back("#" + std::to_string(i + 1));
    std::vector<std::string> row;
    for (const auto& c : flows[i].coeffs) row.push_back(c.str());
    cells.push_back(std::move(row));
  }
  writeTable(out, names, labels, cells);
}

std::string toText(const AnalysisReport& r, const ReportStyle& style) {
  const auto& net = r.net;
  std::ostringstream out;
  out << "Net " << (net.name().empty() ? "(unnamed)" : net.name()) << ": " << net.placeCount()
      << " places, " << net.transitionCount() << " transitions, " << net.arcs().size()
      << " arcs\n\n";

  out << "== P-Invariants ==\n";
  writeSemiflows(out, r.pInvariants, net.placeNames());
  out << '\n';
  if (r.coverage.covered) {
    out << "Covered by positive P-Invariants: the net is structurally bounded and conservative.\n";
  } else {
    out << "Not covered by positive P-Invariants; uncovered places: "
        << joinNames(namesOf(net, r.coverage.uncoveredPlaces), "-") << '\n';
  }
  out << "\n== P-Invariant equations ==\n";
  if (r.equations.empty()) out << "(none)\n";
  for (const auto& eq : r.equations) out << formatEquation(net, eq) << '\n';

  out << "\n== T-Invariants ==\n";
  writeSemiflows(out, r.tInvariants, net.transitionNames());

  out << "\n== Incidence ==\n";
  out << "Forwards incidence matrix I+\n";
  writeMatrix(out, net, r.incidence.forward);
  out << "Backwards incidence matrix I-\n";
  writeMatrix(out, net, r.incidence.backward);
  out << "Combined incidence matrix I\n";
  writeMatrix(out, net, r.incidence.combined);

  out << "\n== Marking ==\n";
  {
    std::vector<std::string> row;
    for (auto k : net.initialMarking().counts()) row.push_back(std::to_string(k));
    writeTable(out, net.placeNames(), {"Initial"}, {row});
  }

  out << "\n== Enabled transitions ==\n";
  {
    std::vector<std::string> row(net.transitionCount(), "no");
    for (auto t : r.initiallyEnabled) row[t.value] = "yes";
    writeTable(out, net.transitionNames(), {""}, {row});
  }

  const auto& ss = r.stateSpace;
  out << "\n== State space ==\n";
  out << "states: " << ss.stateCount << (ss.explored ? "" : " (state limit reached)") << '\n';
  out << "edges: " << ss.edgeCount << '\n';
  if (ss.boundedness.bounded) {
    out << "boundedness: the net is bounded\n";
  } else {
    out << "boundedness: the net is unbounded (omega on "
        << joinNames(namesOf(net, ss.boundedness.unboundedPlaces), "-") << ")\n";
  }
  if (ss.safeness.safe) {
    out << "safeness: the net is safe\n";
  } else {
    out << "safeness: the net is not safe (" << net.placeName(*ss.safeness.witness) << " reaches "
        << (ss.safeness.witnessBound ? std::to_string(*ss.safeness.witnessBound) : "omega")
        << ")\n";
  }
  if (ss.deadlockPath) {
    out << "deadlock: a dead marking is reachable\n";
    out << "shortest path to deadlock: "
        << joinNames(namesOf(net, *ss.deadlockPath), "(initial marking)") << '\n';
  } else if (ss.explored) {
    out << "deadlock: no dead marking is reachable\n";
  } else {
    out << "deadlock: unknown within " << ss.maxStates << " states\n";
  }
  if (ss.explored) {
    out << "dead transitions: " << joinNames(namesOf(net, ss.deadTransitions), "none") << '\n';
  } else {
    out << "dead transitions: unknown\n";
  }

  if (style.includeTimings) {
    out << "\n== Timings (ms) ==\n";
    out << "net build: " << rounded(r.timings.netBuildMs) << '\n'
        << "invariants: " << rounded(r.timings.invariantsMs) << '\n'
        << "reachability: " << rounded(r.timings.reachabilityMs) << '\n'
        << "total: " << rounded(r.timings.totalMs) << '\n';
  }
  return out.str();
}

}  // namespace

AnalysisReport analyze(const PetriNet& net, const AnalysisOptions& options) {
  const auto start = Clock::now();
  AnalysisReport r;
  r.net = net;
  r.initiallyEnabled = enabled(net, net.initialMarking());
  r.incidence = incidence(net);

  const auto invStart = Clock::now();
  r.pInvariants = pInvariants(net);
  r.equations = invariantEquations(net, r.pInvariants);
  r.tInvariants = tInvariants(net);
  r.coverage = coverage(net, r.pInvariants);
  r.timings.invariantsMs = millisSince(invStart);

  const auto reachStart = Clock::now();
  r.stateSpace = analyzeStateSpace(net, options.maxStates);
  r.timings.reachabilityMs = millisSince(reachStart);
  r.timings.totalMs = millisSince(start);
  return r;
}

AnalysisReport analyze(const NetDocument& doc, const AnalysisOptions& options) {
  const auto start = Clock::now();
  PetriNet net = buildNet(doc);
  const double buildMs = millisSince(start);
  AnalysisReport r = analyze(net, options);
  r.timings.netBuildMs = buildMs;
  r.timings.totalMs = millisSince(start);
  return r;
}

std::string writeReport(const AnalysisReport& report, ReportMode mode, ReportStyle style) {
  if (mode == ReportMode::Json) return toJson(report, style).dump(2) + "\n";
  return toText(report, style);
}

}  // namespace petrikit
