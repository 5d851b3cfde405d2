#pragma once

#include <optional>
#include <string>
#include <vector>

#include "petrikit/invariants.hpp"
#include "petrikit/net.hpp"

namespace petrikit {

/// Interactive token game over one net. The current marking is always the
/// result of replaying the history from the initial marking.
class Session {
 public:
  explicit Session(PetriNet net);

  const PetriNet& net() const { return net_; }
  const Marking& marking() const { return trail_.back(); }
  const std::vector<TransitionId>& history() const { return history_; }
  std::vector<TransitionId> enabledNow() const { return enabled(net_, marking()); }
  bool deadlocked() const;

  /// Throws NotEnabledError or Error(UnknownTransition); state is untouched on error.
  void fire(TransitionId t);
  void fire(const std::string& transition);

  /// Fires the first enabled transition in declaration order; nullopt when dead.
  std::optional<TransitionId> autoStep();

  /// False when there is nothing to undo.
  bool undo();
  void reset();

  /// P-invariant equations of the net, computed once.
  const std::vector<InvariantEquation>& equations() const { return equations_; }

 private:
  PetriNet net_;
  std::vector<Marking> trail_;
  std::vector<TransitionId> history_;
  std::vector<InvariantEquation> equations_;
};

}  // namespace petrikit
