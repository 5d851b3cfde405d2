#include "petrikit/session.hpp"

namespace petrikit {

Session::Session(PetriNet net)
    : net_(std::move(net)), trail_{net_.initialMarking()}, equations_(invariantEquations(net_)) {}

bool Session::deadlocked() const {
  return net_.transitionCount() > 0 && enabledNow().empty();
}

void Session::fire(TransitionId t) {
  Marking next = petrikit::fire(net_, marking(), t);
  trail_.push_back(std::move(next));
  history_.push_back(t);
}

void Session::fire(const std::string& transition) { fire(net_.transition(transition)); }

std::optional<TransitionId> Session::autoStep() {
  const auto ready = enabledNow();
  if (ready.empty()) return std::nullopt;
  fire(ready.front());
  return ready.front();
}

bool Session::undo() {
  if (history_.empty()) return false;
  history_.pop_back();
  trail_.pop_back();
  return true;
}

void Session::reset() {
  history_.clear();
  trail_.resize(1);
}

}  // namespace petrikit
