#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "petrikit/api.hpp"
#include "petrikit/formats.hpp"
#include "petrikit/invariants.hpp"
#include "petrikit/repl.hpp"
#include "petrikit/report.hpp"
#include "petrikit/statespace.hpp"

using namespace petrikit;

namespace {

std::size_t defaultMaxStates() {
  if (const char* env = std::getenv("PETRIKIT_MAX_STATES")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid PETRIKIT_MAX_STATES='" << env << "'\n";
  }
  return kDefaultMaxStates;
}

void diagnose(const std::string& file, const Error& e) {
  if (e.code() == ErrorCode::FileNotFound) {
    std::cerr << "error: file not found: " << file << '\n';
    return;
  }
  std::cerr << file;
  if (e.location().known()) {
    std::cerr << ':' << e.location().line;
    if (e.location().column) std::cerr << ':' << e.location().column;
  }
  std::cerr << ": " << codeName(e.code()) << ": " << e.detail() << '\n';
}

// Writes to --out when given, stdout otherwise.
int emit(const std::string& text, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(outPath, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << outPath << '\n';
    return 1;
  }
  out << text;
  return 0;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"petrikit: place/transition net analysis"};
  app.require_subcommand(1);

  std::string file;
  std::string outPath;
  std::size_t maxStates = defaultMaxStates();

  auto* validate = app.add_subcommand("validate", "Parse and check a net file");
  std::string emitFormat;
  validate->add_option("file", file, "Net file (.net or .pnml)")->required();
  validate->add_option("--emit", emitFormat, "Print the net as dsl, pnml or dot")
      ->check(CLI::IsMember({"dsl", "pnml", "dot"}));
  validate->add_option("--out", outPath, "Write the emitted net here");

  auto* analyzeCmd = app.add_subcommand("analyze", "Full analysis report");
  bool asJson = false;
  bool asText = false;
  analyzeCmd->add_option("file", file, "Net file")->required();
  auto* jsonFlag = analyzeCmd->add_flag("--json", asJson, "JSON report");
  analyzeCmd->add_flag("--text", asText, "Text report (default)")->excludes(jsonFlag);
  analyzeCmd->add_option("--max-states", maxStates, "State cap for exploration")
      ->check(CLI::PositiveNumber);
  analyzeCmd->add_option("--out", outPath, "Write the report here");

  auto* invariantsCmd = app.add_subcommand("invariants", "P-invariant equations and T-invariants");
  invariantsCmd->add_option("file", file, "Net file")->required();

  auto* reach = app.add_subcommand("reach", "Reachability graph");
  bool reachDot = false;
  reach->add_option("file", file, "Net file")->required();
  reach->add_option("--max-states", maxStates, "State cap")->check(CLI::PositiveNumber);
  reach->add_flag("--dot", reachDot, "Print the graph in DOT");
  reach->add_option("--out", outPath, "Write the output here");

  auto* deadlock = app.add_subcommand("deadlock", "Shortest path to a dead marking");
  deadlock->add_option("file", file, "Net file")->required();
  deadlock->add_option("--max-states", maxStates, "State cap")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "Interactive token game on stdin");
  simulate->add_option("file", file, "Net file")->required();

  auto* serveCmd = app.add_subcommand("serve", "HTTP/JSON token game service");
  ServeOptions serveOptions;
  std::string webRoot;
  serveCmd->add_option("file", file, "Net file to load at start");
  serveCmd->add_option("--port", serveOptions.port, "TCP port");
  serveCmd->add_option("--host", serveOptions.host, "Bind address");
  serveCmd->add_option("--web-root", webRoot, "Directory with the web UI assets");
  serveCmd->add_option("--max-states", maxStates, "State cap")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      const PetriNet net = loadNet(file);
      std::cerr << file << ": ok (" << net.placeCount() << " places, " << net.transitionCount()
                << " transitions, " << net.arcs().size() << " arcs)\n";
      if (emitFormat == "dsl") return emit(writeDsl(net), outPath);
      if (emitFormat == "pnml") return emit(writePnml(net), outPath);
      if (emitFormat == "dot") return emit(writeDot(net), outPath);
      return 0;
    }

    if (*analyzeCmd) {
      const auto report = analyze(loadNetDocument(file), AnalysisOptions{maxStates});
      return emit(writeReport(report, asJson ? ReportMode::Json : ReportMode::Text), outPath);
    }

    if (*invariantsCmd) {
      const PetriNet net = loadNet(file);
      const auto pflows = pInvariants(net);
      std::cout << "P-invariant equations (" << pflows.size() << "):\n";
      for (const auto& eq : invariantEquations(net, pflows)) {
        std::cout << formatEquation(net, eq) << '\n';
      }
      const auto cov = coverage(net, pflows);
      std::cout << (cov.covered ? "covered by positive P-invariants: structurally bounded\n"
                                : "not covered; uncovered places: " +
                                      joined(namesOf(net, cov.uncoveredPlaces)) + "\n");
      const auto tflows = tInvariants(net);
      std::cout << "T-invariants (" << tflows.size() << "):\n";
      for (const auto& x : tflows) {
        std::string line;
        for (std::size_t t = 0; t < x.coeffs.size(); ++t) {
          if (x.coeffs[t] == 0) continue;
          if (!line.empty()) line += ' ';
          line += net.transitionName(TransitionId{t}) + ":" + x.coeffs[t].str();
        }
        std::cout << line << '\n';
      }
      return 0;
    }

    if (*reach) {
      const PetriNet net = loadNet(file);
      const auto graph = explore(net, maxStates);
      if (reachDot) return emit(writeDot(graph, net), outPath);
      std::string text = "states: " + std::to_string(graph.states.size()) +
                         (graph.truncated ? " (state limit reached)" : "") + "\nedges: " +
                         std::to_string(graph.edges.size()) +
                         "\ndead states: " + std::to_string(graph.deadlocks.size()) + "\n";
      const int rc = emit(text, outPath);
      return graph.truncated ? 3 : rc;
    }

    if (*deadlock) {
      const PetriNet net = loadNet(file);
      const auto path = findDeadlock(net, maxStates);
      if (!path) {
        std::cout << "no dead marking is reachable\n";
      } else {
        const auto names = namesOf(net, *path);
        std::cout << "shortest path to deadlock: "
                  << (names.empty() ? "(initial marking)" : joined(names)) << '\n';
      }
      return 0;
    }

    if (*simulate) {
      Session session(loadNet(file));
      runSimulation(session, std::cin, std::cout, true);
      return 0;
    }

    if (*serveCmd) {
      PetriNet net = file.empty() ? PetriNet{} : loadNet(file);
      Api api(std::move(net), AnalysisOptions{maxStates});
      if (!webRoot.empty()) serveOptions.webRoot = webRoot;
      std::cerr << "serving on http://" << serveOptions.host << ':' << serveOptions.port << '\n';
      if (!serve(api, serveOptions)) {
        std::cerr << "error: cannot listen on " << serveOptions.host << ':' << serveOptions.port
                  << '\n';
        return 1;
      }
      return 0;
    }
  } catch (const StateLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    diagnose(file, e);
    return 1;
  }
  return 0;
}
