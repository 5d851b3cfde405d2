#pragma once

#include <iosfwd>

#include "petrikit/session.hpp"

namespace petrikit {

/// Line-driven token game: fire <T>, auto, undo, reset, invariants, show,
/// help, quit. Reads until quit or end of input.
void runSimulation(Session& session, std::istream& in, std::ostream& out, bool prompt = true);

}  // namespace petrikit
