#pragma once

// Brute-force reference implementations used only by tests. They work from
// the arc list and plain vectors, never through the library's firing,
// incidence or elimination code.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "petrikit/invariants.hpp"
#include "petrikit/net.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;
using IntMatrix = std::vector<Vec>;  // rows x cols

/// |P| x |T| net effect matrix read straight off the arcs.
IntMatrix effectMatrix(const petrikit::PetriNet& net);

/// All minimal-support nonnegative y with y^T A = 0, by enumerating supports
/// in increasing size and solving each restricted system over the rationals.
/// Sorted lexicographically by coefficient vector.
std::vector<std::vector<petrikit::BigInt>> minimalSemiflows(const IntMatrix& a);

IntMatrix transpose(const IntMatrix& a);

struct StateSpace {
  std::map<Vec, std::size_t> depth;  // every reachable marking with BFS depth
  std::size_t edges = 0;
  bool complete = true;
  std::vector<std::int64_t> maxTokens;
};

/// Plain BFS over vectors; stops (complete = false) past maxStates markings.
StateSpace reachable(const petrikit::PetriNet& net, std::size_t maxStates);

bool enabledAt(const petrikit::PetriNet& net, const Vec& m, std::size_t t);
Vec fireAt(const petrikit::PetriNet& net, const Vec& m, std::size_t t);

/// Firing sequences of exactly the given length from the initial marking
/// that end in a marking enabling nothing, in lexicographic transition order.
std::vector<std::vector<std::size_t>> deadSequencesOfLength(const petrikit::PetriNet& net,
                                                            std::size_t length);

}  // namespace oracle
