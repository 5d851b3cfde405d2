#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "petrikit/net.hpp"

namespace petrikit {

inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

struct Edge {
  std::size_t from = 0;
  TransitionId transition;
  std::size_t to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Breadth-first reachability graph. State 0 is the initial marking; states
/// are numbered in discovery order and successors are tried in transition
/// declaration order.
struct ReachabilityGraph {
  std::vector<Marking> states;
  std::vector<Edge> edges;
  /// States with no enabled transition, ascending.
  std::vector<std::size_t> deadlocks;
  /// BFS tree: the edge that discovered each state (none for state 0).
  std::vector<std::optional<std::size_t>> discoveredBy;
  /// Exploration stopped at the state limit; edges and deadlocks are partial.
  bool truncated = false;

  /// Transition labels along the BFS-tree path from state 0.
  std::vector<TransitionId> pathTo(std::size_t state) const;

  friend bool operator==(const ReachabilityGraph&, const ReachabilityGraph&) = default;
};

/// Explores up to maxStates states; never throws on the limit, sets truncated.
ReachabilityGraph explore(const PetriNet& net, std::size_t maxStates = kDefaultMaxStates);

/// As explore, but throws StateLimitError when the limit is hit.
ReachabilityGraph reachabilityGraph(const PetriNet& net, std::size_t maxStates = kDefaultMaxStates);

/// Per-place token count; nullopt stands for omega (unbounded).
struct BoundednessVerdict {
  bool bounded = true;
  std::vector<PlaceId> unboundedPlaces;
  /// Maximum tokens per place over all reachable markings; nullopt = omega.
  std::vector<std::optional<Tokens>> bounds;
  /// Number of nodes in the coverability tree.
  std::size_t treeNodes = 0;
};

/// Karp-Miller coverability tree with omega acceleration against ancestors.
BoundednessVerdict checkBounded(const PetriNet& net);

struct SafenessVerdict {
  bool safe = true;
  bool bounded = true;
  /// First place (declaration order) whose bound exceeds 1 or is omega.
  std::optional<PlaceId> witness;
  std::optional<Tokens> witnessBound;  // nullopt with a witness means omega
};

SafenessVerdict checkSafe(const PetriNet& net);
SafenessVerdict checkSafe(const BoundednessVerdict& bounded);

/// Shortest firing sequence from the initial marking to a marking that
/// enables no transition; ties go to the earlier-declared transition at
/// every layer. Nets without transitions have no deadlock. Throws
/// StateLimitError when no dead state is found before the limit.
std::optional<std::vector<TransitionId>> findDeadlock(const PetriNet& net,
                                                      std::size_t maxStates = kDefaultMaxStates);

/// Deadlock path read off an already explored graph; same contract as
/// findDeadlock. Throws TruncatedGraph when the graph is partial and has no
/// dead state.
std::optional<std::vector<TransitionId>> shortestDeadlock(const ReachabilityGraph& graph,
                                                          const PetriNet& net);

/// Transitions that label no edge. Throws Error(TruncatedGraph) on a partial graph.
std::vector<TransitionId> deadTransitions(const ReachabilityGraph& graph, const PetriNet& net);

struct StateSpaceVerdict {
  BoundednessVerdict boundedness;
  SafenessVerdict safeness;
  bool explored = false;  // false when the reachability graph hit the limit
  std::optional<std::vector<TransitionId>> deadlockPath;
  std::vector<TransitionId> deadTransitions;
  std::size_t stateCount = 0;
  std::size_t edgeCount = 0;
  std::size_t maxStates = kDefaultMaxStates;
};

StateSpaceVerdict analyzeStateSpace(const PetriNet& net, std::size_t maxStates = kDefaultMaxStates);

}  // namespace petrikit
