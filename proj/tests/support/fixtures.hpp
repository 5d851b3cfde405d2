#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "petrikit/net.hpp"

namespace fixtures {

/// The bundled baking-soda net from nets/bakingsoda.net.
const petrikit::PetriNet& bakingSoda();
std::string bakingSodaPath();

/// buildNet(parseDsl(text)).
petrikit::PetriNet dsl(std::string_view text);

struct RandomNetOptions {
  std::size_t maxPlaces = 6;
  std::size_t maxTransitions = 6;
  std::uint64_t maxWeight = 3;
  std::int64_t maxTokens = 2;
  double arcDensity = 0.3;
};

/// Random P/T net; node names are p0.. and t0.., arcs in random order.
petrikit::PetriNet randomNet(std::mt19937_64& rng, const RandomNetOptions& options = {});

/// Random walk of up to maxSteps firings from the initial marking.
std::vector<petrikit::TransitionId> randomRun(const petrikit::PetriNet& net, std::mt19937_64& rng,
                                              std::size_t maxSteps);

/// The 28 reference P-invariant equations as printed, verbatim.
const std::vector<std::string>& printedEquations();

}  // namespace fixtures
