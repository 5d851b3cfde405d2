#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "petrikit/invariants.hpp"
#include "petrikit/net.hpp"
#include "petrikit/statespace.hpp"

namespace petrikit {

struct Timings {
  double netBuildMs = 0;
  double invariantsMs = 0;
  double reachabilityMs = 0;
  double totalMs = 0;
};

/// Everything the analyze command reports, in the order it is printed.
struct AnalysisReport {
  PetriNet net;
  std::vector<TransitionId> initiallyEnabled;
  IncidenceMatrices incidence;
  std::vector<Semiflow> pInvariants;
  std::vector<InvariantEquation> equations;
  std::vector<Semiflow> tInvariants;
  CoverageReport coverage;
  StateSpaceVerdict stateSpace;
  Timings timings;
};

struct AnalysisOptions {
  std::size_t maxStates = kDefaultMaxStates;
};

AnalysisReport analyze(const PetriNet& net, const AnalysisOptions& options = {});

/// Builds the net from the document first and times that phase too.
AnalysisReport analyze(const NetDocument& doc, const AnalysisOptions& options = {});

enum class ReportMode { Json, Text };

struct ReportStyle {
  bool includeTimings = true;
};

std::string writeReport(const AnalysisReport& report, ReportMode mode, ReportStyle style = {});

}  // namespace petrikit
