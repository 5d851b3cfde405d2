#include "petrikit/statespace.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace petrikit {

std::vector<TransitionId> ReachabilityGraph::pathTo(std::size_t state) const {
  std::vector<TransitionId> path;
  while (auto e = discoveredBy.at(state)) {
    path.push_back(edges[*e].transition);
    state = edges[*e].from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

enum class Stop { Never, AtFirstDeadlock };

bool isDead(const PetriNet& net, const Marking& m) {
  if (net.transitionCount() == 0) return false;
  for (std::size_t t = 0; t < net.transitionCount(); ++t) {
    if (isEnabled(net, m, TransitionId{t})) return false;
  }
  return true;
}

ReachabilityGraph bfs(const PetriNet& net, std::size_t maxStates, Stop stop) {
  ReachabilityGraph g;
  std::unordered_map<Marking, std::size_t> index;

  auto discover = [&](Marking m, std::optional<std::size_t> via) {
    const std::size_t id = g.states.size();
    index.emplace(m, id);
    if (isDead(net, m)) g.deadlocks.push_back(id);
    g.states.push_back(std::move(m));
    g.discoveredBy.push_back(via);
    return id;
  };

  if (maxStates == 0) {
    g.truncated = true;
    return g;
  }
  discover(net.initialMarking(), std::nullopt);

  for (std::size_t s = 0; s < g.states.size(); ++s) {
    if (stop == Stop::AtFirstDeadlock && !g.deadlocks.empty()) return g;
    for (std::size_t ti = 0; ti < net.transitionCount(); ++ti) {
      const TransitionId t{ti};
      if (!isEnabled(net, g.states[s], t)) continue;
      Marking next = fire(net, g.states[s], t);
      auto it = index.find(next);
      if (it != index.end()) {
        g.edges.push_back({s, t, it->second});
        continue;
      }
      if (g.states.size() >= maxStates) {
        g.truncated = true;
        return g;
      }
      g.edges.push_back({s, t, g.states.size()});
      discover(std::move(next), g.edges.size() - 1);
    }
  }
  return g;
}

}  // namespace

ReachabilityGraph explore(const PetriNet& net, std::size_t maxStates) {
  return bfs(net, maxStates, Stop::Never);
}

ReachabilityGraph reachabilityGraph(const PetriNet& net, std::size_t maxStates) {
  auto g = explore(net, maxStates);
  if (g.truncated) throw StateLimitError(g.states.size(), maxStates);
  return g;
}

std::optional<std::vector<TransitionId>> shortestDeadlock(const ReachabilityGraph& graph,
                                                          const PetriNet& net) {
  (void)net;
  if (!graph.deadlocks.empty()) return graph.pathTo(graph.deadlocks.front());
  if (graph.truncated) {
    throw Error(ErrorCode::TruncatedGraph,
                "deadlock status unknown: graph truncated after " +
                    std::to_string(graph.states.size()) + " states");
  }
  return std::nullopt;
}

std::optional<std::vector<TransitionId>> findDeadlock(const PetriNet& net, std::size_t maxStates) {
  auto g = bfs(net, maxStates, Stop::AtFirstDeadlock);
  if (!g.deadlocks.empty()) return g.pathTo(g.deadlocks.front());
  if (g.truncated) throw StateLimitError(g.states.size(), maxStates);
  return std::nullopt;
}

std::vector<TransitionId> deadTransitions(const ReachabilityGraph& graph, const PetriNet& net) {
  if (graph.truncated) {
    throw Error(ErrorCode::TruncatedGraph, "dead transitions need a fully explored graph");
  }
  std::vector<bool> fires(net.transitionCount(), false);
  for (const auto& e : graph.edges) fires[e.transition.value] = true;
  std::vector<TransitionId> out;
  for (std::size_t t = 0; t < fires.size(); ++t) {
    if (!fires[t]) out.push_back(TransitionId{t});
  }
  return out;
}

namespace {

// Coverability markings use the largest count as omega.
constexpr Tokens kOmega = std::numeric_limits<Tokens>::max();

struct KmNode {
  std::vector<Tokens> marking;
  std::optional<std::size_t> parent;
};

struct VectorHash {
  std::size_t operator()(const std::vector<Tokens>& v) const noexcept {
    return std::hash<Marking>{}(Marking(v));
  }
};

bool enabledOmega(const PetriNet& net, const std::vector<Tokens>& m, TransitionId t) {
  for (const auto& in : net.preset(t)) {
    if (m[in.place.value] != kOmega && m[in.place.value] < in.weight) return false;
  }
  return true;
}

std::vector<Tokens> fireOmega(const PetriNet& net, std::vector<Tokens> m, TransitionId t) {
  for (const auto& in : net.preset(t)) {
    if (m[in.place.value] != kOmega) m[in.place.value] -= in.weight;
  }
  for (const auto& out : net.postset(t)) {
    auto& c = m[out.place.value];
    if (c == kOmega) continue;
    // Saturating add: a finite count reaching the sentinel is unbounded for our purposes.
    c = (kOmega - c <= out.weight) ? kOmega : c + out.weight;
  }
  return m;
}

}  // namespace

BoundednessVerdict checkBounded(const PetriNet& net) {
  const std::size_t np = net.placeCount();
  std::vector<KmNode> tree;
  std::unordered_set<std::vector<Tokens>, VectorHash> seen;
  std::vector<Tokens> root(net.initialMarking().counts().begin(),
                           net.initialMarking().counts().end());
  seen.insert(root);
  tree.push_back({std::move(root), std::nullopt});

  for (std::size_t n = 0; n < tree.size(); ++n) {
    for (std::size_t ti = 0; ti < net.transitionCount(); ++ti) {
      const TransitionId t{ti};
      if (!enabledOmega(net, tree[n].marking, t)) continue;
      auto next = fireOmega(net, tree[n].marking, t);
      for (std::optional<std::size_t> a = n; a; a = tree[*a].parent) {
        const auto& anc = tree[*a].marking;
        bool dominates = true;
        bool strict = false;
        for (std::size_t p = 0; p < np && dominates; ++p) {
          if (next[p] < anc[p]) dominates = false;
          else if (next[p] > anc[p]) strict = true;
        }
        if (!dominates || !strict) continue;
        for (std::size_t p = 0; p < np; ++p) {
          if (next[p] > anc[p]) next[p] = kOmega;
        }
      }
      if (!seen.insert(next).second) continue;
      tree.push_back({std::move(next), n});
    }
  }

  BoundednessVerdict v;
  v.treeNodes = tree.size();
  v.bounds.assign(np, Tokens{0});
  for (const auto& node : tree) {
    for (std::size_t p = 0; p < np; ++p) {
      auto& b = v.bounds[p];
      if (!b) continue;
      if (node.marking[p] == kOmega) b.reset();
      else b = std::max(*b, node.marking[p]);
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    if (!v.bounds[p]) v.unboundedPlaces.push_back(PlaceId{p});
  }
  v.bounded = v.unboundedPlaces.empty();
  return v;
}

SafenessVerdict checkSafe(const BoundednessVerdict& bounded) {
  SafenessVerdict v;
  v.bounded = bounded.bounded;
  for (std::size_t p = 0; p < bounded.bounds.size(); ++p) {
    const auto& b = bounded.bounds[p];
    if (!b || *b > 1) {
      v.safe = false;
      v.witness = PlaceId{p};
      v.witnessBound = b;
      break;
    }
  }
  return v;
}

SafenessVerdict checkSafe(const PetriNet& net) { return checkSafe(checkBounded(net)); }

StateSpaceVerdict analyzeStateSpace(const PetriNet& net, std::size_t maxStates) {
  StateSpaceVerdict v;
  v.maxStates = maxStates;
  v.boundedness = checkBounded(net);
  v.safeness = checkSafe(v.boundedness);

  const auto graph = explore(net, maxStates);
  v.stateCount = graph.states.size();
  v.edgeCount = graph.edges.size();
  v.explored = !graph.truncated;
  if (!graph.deadlocks.empty()) v.deadlockPath = graph.pathTo(graph.deadlocks.front());
  if (v.explored) v.deadTransitions = deadTransitions(graph, net);
  return v;
}

}  // namespace petrikit
