#include "petrikit/net.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace petrikit {

bool Marking::covers(const Marking& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] < other.counts_[i]) return false;
  }
  return true;
}

std::optional<PlaceId> PetriNet::findPlace(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end() || it->second.kind != NodeKind::Place) return std::nullopt;
  return PlaceId{it->second.index};
}

std::optional<TransitionId> PetriNet::findTransition(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end() || it->second.kind != NodeKind::Transition) return std::nullopt;
  return TransitionId{it->second.index};
}

PlaceId PetriNet::place(std::string_view name) const {
  if (auto p = findPlace(name)) return *p;
  throw Error(ErrorCode::UnknownPlace, "unknown place " + std::string(name));
}

TransitionId PetriNet::transition(std::string_view name) const {
  if (auto t = findTransition(name)) return *t;
  throw Error(ErrorCode::UnknownTransition, "unknown transition " + std::string(name));
}

PetriNet PetriNet::withInitialMarking(Marking m) const {
  if (m.size() != placeCount()) {
    throw Error(ErrorCode::MarkingSizeMismatch,
                "marking has " + std::to_string(m.size()) + " entries, net has " +
                    std::to_string(placeCount()) + " places");
  }
  PetriNet copy = *this;
  copy.initial_ = std::move(m);
  return copy;
}

std::string PetriNet::nodeName(NodeRef n) const {
  return n.kind == NodeKind::Place ? places_.at(n.index) : transitions_.at(n.index);
}

bool operator==(const PetriNet& a, const PetriNet& b) {
  return a.name_ == b.name_ && a.places_ == b.places_ && a.transitions_ == b.transitions_ &&
         a.arcs_ == b.arcs_ && a.initial_ == b.initial_;
}

PetriNet buildNet(const NetDocument& doc) {
  PetriNet net;
  net.name_ = doc.name;

  auto declare = [&](const std::string& name, NodeRef ref, SourceLocation where) {
    if (!net.lookup_.emplace(name, ref).second) {
      throw Error(ErrorCode::DuplicateId, "identifier " + name + " is declared twice", where);
    }
  };

  std::vector<Tokens> initial;
  initial.reserve(doc.places.size());
  for (const auto& p : doc.places) {
    declare(p.name, {NodeKind::Place, net.places_.size()}, p.where);
    if (p.tokens < 0) {
      throw Error(ErrorCode::NegativeTokens,
                  "place " + p.name + " has negative token count " + std::to_string(p.tokens),
                  p.where);
    }
    net.places_.push_back(p.name);
    initial.push_back(static_cast<Tokens>(p.tokens));
  }
  for (const auto& t : doc.transitions) {
    declare(t.name, {NodeKind::Transition, net.transitions_.size()}, t.where);
    net.transitions_.push_back(t.name);
  }
  net.initial_ = Marking(std::move(initial));
  net.pre_.resize(net.transitions_.size());
  net.post_.resize(net.transitions_.size());

  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& a : doc.arcs) {
    auto resolve = [&](const std::string& name) {
      auto it = net.lookup_.find(name);
      if (it == net.lookup_.end()) {
        throw Error(ErrorCode::UnknownEndpoint,
                    "arc " + a.source + " -> " + a.target + " names undeclared node " + name,
                    a.where);
      }
      return it->second;
    };
    NodeRef src = resolve(a.source);
    NodeRef dst = resolve(a.target);
    if (src.kind == dst.kind) {
      throw Error(ErrorCode::NonBipartiteArc,
                  "arc " + a.source + " -> " + a.target + " connects two " +
                      (src.kind == NodeKind::Place ? "places" : "transitions"),
                  a.where);
    }
    if (a.weight < 1) {
      throw Error(ErrorCode::ZeroWeight,
                  "arc " + a.source + " -> " + a.target + " has weight " +
                      std::to_string(a.weight) + "; weights must be positive",
                  a.where);
    }
    if (!seen.emplace(a.source, a.target).second) {
      throw Error(ErrorCode::DuplicateArc, "arc " + a.source + " -> " + a.target + " repeated",
                  a.where);
    }
    Arc arc{src, dst, static_cast<Tokens>(a.weight)};
    auto& bucket = arc.fromPlace() ? net.pre_[arc.transition().value]
                                   : net.post_[arc.transition().value];
    bucket.push_back({arc.place(), arc.weight});
    net.arcs_.push_back(arc);
  }
  auto byPlace = [](const WeightedPlace& x, const WeightedPlace& y) { return x.place < y.place; };
  for (auto& v : net.pre_) std::sort(v.begin(), v.end(), byPlace);
  for (auto& v : net.post_) std::sort(v.begin(), v.end(), byPlace);
  return net;
}

IncidenceMatrices incidence(const PetriNet& net) {
  const auto np = net.placeCount();
  const auto nt = net.transitionCount();
  IncidenceMatrices out{Matrix<Tokens>(np, nt), Matrix<Tokens>(np, nt),
                        Matrix<std::int64_t>(np, nt)};
  for (const Arc& a : net.arcs()) {
    auto& target = a.fromPlace() ? out.backward : out.forward;
    target(a.place().value, a.transition().value) = a.weight;
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t t = 0; t < nt; ++t) {
      out.combined(p, t) = static_cast<std::int64_t>(out.forward(p, t)) -
                           static_cast<std::int64_t>(out.backward(p, t));
    }
  }
  return out;
}

namespace {

void checkSize(const PetriNet& net, const Marking& m) {
  if (m.size() != net.placeCount()) {
    throw Error(ErrorCode::MarkingSizeMismatch,
                "marking has " + std::to_string(m.size()) + " entries, net has " +
                    std::to_string(net.placeCount()) + " places");
  }
}

void checkTransition(const PetriNet& net, TransitionId t) {
  if (t.value >= net.transitionCount()) {
    throw Error(ErrorCode::UnknownTransition,
                "transition index " + std::to_string(t.value) + " out of range");
  }
}

}  // namespace

bool isEnabled(const PetriNet& net, const Marking& m, TransitionId t) {
  for (const auto& in : net.preset(t)) {
    if (m[in.place] < in.weight) return false;
  }
  return true;
}

std::vector<TransitionId> enabled(const PetriNet& net, const Marking& m) {
  checkSize(net, m);
  std::vector<TransitionId> out;
  for (std::size_t i = 0; i < net.transitionCount(); ++i) {
    if (isEnabled(net, m, TransitionId{i})) out.push_back(TransitionId{i});
  }
  return out;
}

std::vector<PlaceId> deficientPlaces(const PetriNet& net, const Marking& m, TransitionId t) {
  checkSize(net, m);
  checkTransition(net, t);
  std::vector<PlaceId> out;
  for (const auto& in : net.preset(t)) {
    if (m[in.place] < in.weight) out.push_back(in.place);
  }
  return out;
}

Marking fire(const PetriNet& net, const Marking& m, TransitionId t) {
  checkSize(net, m);
  checkTransition(net, t);
  if (!isEnabled(net, m, t)) {
    auto missing = deficientPlaces(net, m, t);
    throw NotEnabledError(net.transitionName(t), namesOf(net, missing));
  }
  Marking next = m;
  for (const auto& in : net.preset(t)) next[in.place] -= in.weight;
  for (const auto& out : net.postset(t)) next[out.place] += out.weight;
  return next;
}

Marking fireSequence(const PetriNet& net, const Marking& m, std::span<const TransitionId> seq) {
  Marking current = m;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      current = fire(net, current, seq[i]);
    } catch (const NotEnabledError& e) {
      throw NotEnabledError(e.transition(), e.deficientPlaces(), i);
    }
  }
  return current;
}

std::vector<TransitionId> transitionsByName(const PetriNet& net,
                                            std::span<const std::string> names) {
  std::vector<TransitionId> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(net.transition(n));
  return out;
}

std::vector<std::string> namesOf(const PetriNet& net, std::span<const TransitionId> ts) {
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (auto t : ts) out.push_back(net.transitionName(t));
  return out;
}

std::vector<std::string> namesOf(const PetriNet& net, std::span<const PlaceId> ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (auto p : ps) out.push_back(net.placeName(p));
  return out;
}

}  // namespace petrikit

std::size_t std::hash<petrikit::Marking>::operator()(const petrikit::Marking& m) const noexcept {
  // FNV-1a over the counts.
  std::size_t h = 1469598103934665603ull;
  for (auto c : m.counts()) {
    h ^= static_cast<std::size_t>(c);
    h *= 1099511628211ull;
  }
  return h;
}
