#include <fstream>
#include <sstream>

#include "petrikit/formats.hpp"

namespace petrikit {

namespace {

std::string dotQuoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string writeDot(const PetriNet& net) {
  std::ostringstream out;
  out << "digraph " << dotQuoted(net.name()) << " {\n"
      << "  rankdir=LR;\n";
  for (std::size_t p = 0; p < net.placeCount(); ++p) {
    const auto& id = net.placeName(PlaceId{p});
    out << "  " << dotQuoted(id) << " [shape=circle, label="
        << dotQuoted(id + " (" + std::to_string(net.initialMarking()[PlaceId{p}]) + ")") << "];\n";
  }
  for (const auto& t : net.transitionNames()) {
    out << "  " << dotQuoted(t) << " [shape=box, label=" << dotQuoted(t) << "];\n";
  }
  for (const auto& a : net.arcs()) {
    out << "  " << dotQuoted(net.nodeName(a.source)) << " -> " << dotQuoted(net.nodeName(a.target));
    if (a.weight != 1) out << " [label=" << dotQuoted(std::to_string(a.weight)) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string writeDot(const ReachabilityGraph& graph, const PetriNet& net) {
  std::vector<bool> dead(graph.states.size(), false);
  for (auto s : graph.deadlocks) dead[s] = true;

  std::ostringstream out;
  out << "digraph " << dotQuoted(net.name() + " reachability") << " {\n";
  for (std::size_t s = 0; s < graph.states.size(); ++s) {
    std::string label = "S" + std::to_string(s) + "\\n";
    std::string entries;
    for (std::size_t p = 0; p < net.placeCount(); ++p) {
      if (auto k = graph.states[s][PlaceId{p}]; k != 0) {
        if (!entries.empty()) entries += ' ';
        entries += net.placeName(PlaceId{p}) + ":" + std::to_string(k);
      }
    }
    label += entries.empty() ? "(empty)" : entries;
    out << "  s" << s << " [shape=" << (dead[s] ? "doubleoctagon" : "ellipse") << ", label=\""
        << label << "\"];\n";
  }
  for (const auto& e : graph.edges) {
    out << "  s" << e.from << " -> s" << e.to
        << " [label=" << dotQuoted(net.transitionName(e.transition)) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string readTextFile(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "file not found: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NetDocument parseNetText(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n\xEF\xBB\xBF");
  // An XML declaration must open the document, so drop what precedes it.
  if (first != std::string_view::npos && text[first] == '<') return parsePnml(text.substr(first));
  return parseDsl(text);
}

NetDocument loadNetDocument(const std::filesystem::path& file) {
  const auto text = readTextFile(file);
  const auto ext = file.extension().string();
  if (ext == ".pnml" || ext == ".xml") return parsePnml(text);
  if (ext == ".net") return parseDsl(text);
  return parseNetText(text);
}

PetriNet loadNet(const std::filesystem::path& file) { return buildNet(loadNetDocument(file)); }

}  // namespace petrikit
