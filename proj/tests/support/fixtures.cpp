#include "fixtures.hpp"

#include <algorithm>

#include "petrikit/formats.hpp"

namespace fixtures {

std::string bakingSodaPath() { return std::string(PETRIKIT_NETS_DIR) + "/bakingsoda.net"; }

const petrikit::PetriNet& bakingSoda() {
  static const petrikit::PetriNet net = petrikit::loadNet(bakingSodaPath());
  return net;
}

petrikit::PetriNet dsl(std::string_view text) {
  return petrikit::buildNet(petrikit::parseDsl(text));
}

petrikit::PetriNet randomNet(std::mt19937_64& rng, const RandomNetOptions& o) {
  std::uniform_int_distribution<std::size_t> places(1, o.maxPlaces);
  std::uniform_int_distribution<std::size_t> transitions(1, o.maxTransitions);
  std::uniform_int_distribution<std::uint64_t> weight(1, o.maxWeight);
  std::uniform_int_distribution<std::int64_t> tokens(0, o.maxTokens);
  std::bernoulli_distribution arc(o.arcDensity);

  petrikit::NetDocument doc;
  doc.name = "random";
  const auto np = places(rng);
  const auto nt = transitions(rng);
  for (std::size_t p = 0; p < np; ++p) doc.places.push_back({"p" + std::to_string(p), tokens(rng), {}});
  for (std::size_t t = 0; t < nt; ++t) doc.transitions.push_back({"t" + std::to_string(t), {}});
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t t = 0; t < nt; ++t) {
      const auto pn = "p" + std::to_string(p);
      const auto tn = "t" + std::to_string(t);
      if (arc(rng)) doc.arcs.push_back({pn, tn, static_cast<std::int64_t>(weight(rng)), {}});
      if (arc(rng)) doc.arcs.push_back({tn, pn, static_cast<std::int64_t>(weight(rng)), {}});
    }
  }
  std::shuffle(doc.arcs.begin(), doc.arcs.end(), rng);
  return petrikit::buildNet(doc);
}

std::vector<petrikit::TransitionId> randomRun(const petrikit::PetriNet& net, std::mt19937_64& rng,
                                              std::size_t maxSteps) {
  std::vector<petrikit::TransitionId> run;
  petrikit::Marking m = net.initialMarking();
  for (std::size_t i = 0; i < maxSteps; ++i) {
    const auto ready = petrikit::enabled(net, m);
    if (ready.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const auto t = ready[pick(rng)];
    run.push_back(t);
    m = petrikit::fire(net, m, t);
  }
  return run;
}

const std::vector<std::string>& printedEquations() {
  static const std::vector<std::string> eqs = {
      "M(P10) + M(P11) + M(P12) = 1",
      "M(P10) + M(P11) + M(P13) = 1",
      "M(P10) + M(P11) + M(P14) = 1",
      "M(P1) + M(P15) + M(P16) + M(P5) + M(P8) = 1",
      "M(P1) + M(P15) + M(P17) + M(P5) + M(P8) = 1",
      "M(P1) + M(P15) + M(P18) + M(P5) + M(P8) = 1",
      "M(P15) + M(P16) + M(P6) + M(P8) = 1",
      "M(P15) + M(P17) + M(P2) + M(P5) + M(P8) = 1",
      "M(P0) + M(P15) + M(P17) + M(P4) + M(P8) = 1",
      "M(P15) + M(P17) + M(P6) + M(P8) = 1",
      "M(P15) + M(P18) + M(P2) + M(P5) + M(P8) = 1",
      "M(P0) + M(P15) + M(P18) + M(P4) + M(P8) = 1",
      "M(P15) + M(P18) + M(P6) + M(P8) = 1",
      "M(P0) + M(P15) + M(P16) + M(P4) + M(P8) = 1",
      "M(P0) + M(P11) + M(P12) + M(P3) = 1",
      "M(P0) + M(P11) + M(P13) + M(P3) = 1",
      "M(P13) + M(P6) + M(P7) = 1",
      "M(P0) + M(P11) + M(P14) + M(P3) = 1",
      "M(P14) + M(P6) + M(P7) = 1",
      "M(P1) + M(P12) + M(P5) + M(P7) = 1",
      "M(P0) + M(P12) + M(P4) + M(P7) = 1",
      "M(P1) + M(P13) + M(P5) + M(P7) = 1",
      "M(P0) + M(P13) + M(P4) + M(P7) = 1",
      "M(P1) + M(P14) + M(P5) + M(P7) = 1",
      "M(P0) + M(P14) + M(P4) + M(P7) = 1",
      "M(P12) + M(P2) + M(P5) + M(P7) = 1",
      "M(P13) + M(P2) + M(P5) + M(P7) = 1",
      "M(P14) + M(P2) + M(P5) + M(P7) = 1",
  };
  return eqs;
}

}  // namespace fixtures
