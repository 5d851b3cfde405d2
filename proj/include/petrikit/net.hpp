#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "petrikit/document.hpp"

namespace petrikit {

using Tokens = std::uint64_t;

/// Dense ordinal of a node within its kind, in declaration order.
template <class Tag>
struct Index {
  std::size_t value = 0;

  friend auto operator<=>(const Index&, const Index&) = default;
};

using PlaceId = Index<struct PlaceTag>;
using TransitionId = Index<struct TransitionTag>;

enum class NodeKind { Place, Transition };

struct NodeRef {
  NodeKind kind = NodeKind::Place;
  std::size_t index = 0;

  friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct Arc {
  NodeRef source;
  NodeRef target;
  Tokens weight = 1;

  bool fromPlace() const { return source.kind == NodeKind::Place; }
  PlaceId place() const { return PlaceId{fromPlace() ? source.index : target.index}; }
  TransitionId transition() const {
    return TransitionId{fromPlace() ? target.index : source.index};
  }

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct WeightedPlace {
  PlaceId place;
  Tokens weight = 1;

  friend bool operator==(const WeightedPlace&, const WeightedPlace&) = default;
};

/// Token counts, one per place, in place declaration order.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::size_t places) : counts_(places, 0) {}
  explicit Marking(std::vector<Tokens> counts) : counts_(std::move(counts)) {}

  std::size_t size() const { return counts_.size(); }
  Tokens operator[](PlaceId p) const { return counts_[p.value]; }
  Tokens& operator[](PlaceId p) { return counts_[p.value]; }
  std::span<const Tokens> counts() const { return counts_; }

  /// Componentwise m >= other.
  bool covers(const Marking& other) const;

  friend auto operator<=>(const Marking&, const Marking&) = default;

 private:
  std::vector<Tokens> counts_;
};

/// Row-major dense matrix; rows are places, columns transitions.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

struct IncidenceMatrices {
  Matrix<Tokens> backward;  // I-, consumption
  Matrix<Tokens> forward;   // I+, production
  Matrix<std::int64_t> combined;

  std::int64_t operator()(PlaceId p, TransitionId t) const { return combined(p.value, t.value); }
};

/// Immutable place/transition net. Build one with buildNet().
class PetriNet {
 public:
  PetriNet() = default;

  const std::string& name() const { return name_; }
  std::size_t placeCount() const { return places_.size(); }
  std::size_t transitionCount() const { return transitions_.size(); }

  const std::string& placeName(PlaceId p) const { return places_.at(p.value); }
  const std::string& transitionName(TransitionId t) const { return transitions_.at(t.value); }
  const std::vector<std::string>& placeNames() const { return places_; }
  const std::vector<std::string>& transitionNames() const { return transitions_; }

  std::optional<PlaceId> findPlace(std::string_view name) const;
  std::optional<TransitionId> findTransition(std::string_view name) const;
  /// Throws Error(UnknownPlace).
  PlaceId place(std::string_view name) const;
  /// Throws Error(UnknownTransition).
  TransitionId transition(std::string_view name) const;

  /// Arcs in declaration order.
  std::span<const Arc> arcs() const { return arcs_; }
  const Marking& initialMarking() const { return initial_; }

  /// Input places of t with arc weights, ascending place index.
  std::span<const WeightedPlace> preset(TransitionId t) const { return pre_.at(t.value); }
  /// Output places of t with arc weights, ascending place index.
  std::span<const WeightedPlace> postset(TransitionId t) const { return post_.at(t.value); }

  /// Same structure, different initial marking. Throws MarkingSizeMismatch.
  PetriNet withInitialMarking(Marking m) const;

  std::string nodeName(NodeRef n) const;

  friend PetriNet buildNet(const NetDocument& doc);
  friend bool operator==(const PetriNet& a, const PetriNet& b);

 private:
  std::string name_;
  std::vector<std::string> places_;
  std::vector<std::string> transitions_;
  std::vector<Arc> arcs_;
  Marking initial_;
  std::vector<std::vector<WeightedPlace>> pre_;
  std::vector<std::vector<WeightedPlace>> post_;
  std::unordered_map<std::string, NodeRef> lookup_;
};

/// Validates a description and freezes it into a net.
/// Throws Error with DuplicateId, UnknownEndpoint, NonBipartiteArc,
/// DuplicateArc, ZeroWeight or NegativeTokens, located at the offending line.
PetriNet buildNet(const NetDocument& doc);

IncidenceMatrices incidence(const PetriNet& net);

bool isEnabled(const PetriNet& net, const Marking& m, TransitionId t);

/// Enabled transitions in declaration order. Throws MarkingSizeMismatch.
std::vector<TransitionId> enabled(const PetriNet& net, const Marking& m);

/// Places of t's preset that lack tokens at m, in declaration order.
std::vector<PlaceId> deficientPlaces(const PetriNet& net, const Marking& m, TransitionId t);

/// Throws NotEnabledError or Error(UnknownTransition).
Marking fire(const PetriNet& net, const Marking& m, TransitionId t);

/// Left fold of fire. A NotEnabledError carries the failing position.
Marking fireSequence(const PetriNet& net, const Marking& m, std::span<const TransitionId> seq);

/// Resolves transition names; throws Error(UnknownTransition).
std::vector<TransitionId> transitionsByName(const PetriNet& net,
                                            std::span<const std::string> names);

std::vector<std::string> namesOf(const PetriNet& net, std::span<const TransitionId> ts);
std::vector<std::string> namesOf(const PetriNet& net, std::span<const PlaceId> ps);

}  // namespace petrikit

template <>
struct std::hash<petrikit::Marking> {
  std::size_t operator()(const petrikit::Marking& m) const noexcept;
};
