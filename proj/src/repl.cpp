#include "petrikit/repl.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace petrikit {

namespace {

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ' ';
    out += n;
  }
  return out;
}

void show(const Session& s, std::ostream& out) {
  const auto& net = s.net();
  std::string entries;
  for (std::size_t p = 0; p < net.placeCount(); ++p) {
    if (auto k = s.marking()[PlaceId{p}]; k != 0) {
      if (!entries.empty()) entries += ' ';
      entries += net.placeName(PlaceId{p}) + ":" + std::to_string(k);
    }
  }
  out << "marking: " << (entries.empty() ? "(empty)" : entries) << '\n';
  const auto now = namesOf(net, s.enabledNow());
  out << "enabled: " << (now.empty() ? "(none)" : joined(now)) << '\n';
  if (s.deadlocked()) {
    const auto history = namesOf(net, s.history());
    out << "DEADLOCK after " << (history.empty() ? "(no firings)" : joined(history)) << '\n';
  }
}

void help(std::ostream& out) {
  out << "commands: fire <T> | auto | undo | reset | invariants | show | help | quit\n";
}

}  // namespace

void runSimulation(Session& session, std::istream& in, std::ostream& out, bool prompt) {
  show(session, out);
  std::string line;
  while (true) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    std::istringstream words(line);
    std::string cmd;
    if (!(words >> cmd)) continue;

    if (cmd == "quit" || cmd == "exit") break;
    if (cmd == "help") {
      help(out);
    } else if (cmd == "show") {
      show(session, out);
    } else if (cmd == "fire") {
      std::string t;
      if (!(words >> t)) {
        out << "error: fire needs a transition id\n";
        continue;
      }
      try {
        session.fire(t);
        out << "fired " << t << '\n';
        show(session, out);
      } catch (const NotEnabledError& e) {
        out << "error: " << e.transition() << " is not enabled; deficient places: "
            << joined(e.deficientPlaces()) << '\n';
      } catch (const Error& e) {
        out << "error: unknown transition " << t << '\n';
      }
    } else if (cmd == "auto") {
      if (auto t = session.autoStep()) {
        out << "fired " << session.net().transitionName(*t) << '\n';
        show(session, out);
      } else {
        out << "nothing is enabled\n";
      }
    } else if (cmd == "undo") {
      if (session.undo()) show(session, out);
      else out << "nothing to undo\n";
    } else if (cmd == "reset") {
      session.reset();
      show(session, out);
    } else if (cmd == "invariants") {
      if (session.equations().empty()) out << "(no P-invariants)\n";
      for (const auto& eq : session.equations()) {
        const auto value = evaluate(eq, session.marking());
        out << formatEquation(session.net(), eq) << "  [now " << value << ", "
            << (value == eq.constant ? "holds" : "VIOLATED") << "]\n";
      }
    } else {
      out << "error: unknown command '" << cmd << "'\n";
      help(out);
    }
  }
}

}  // namespace petrikit
