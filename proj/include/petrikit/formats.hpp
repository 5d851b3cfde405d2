#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "petrikit/document.hpp"
#include "petrikit/net.hpp"
#include "petrikit/statespace.hpp"

namespace petrikit {

/// Line-oriented net DSL:
///
///     net <name>
///     place <id> [tokens <n>]
///     trans <id>
///     arc <src> -> <dst> [weight <n>]
///
/// `#` starts a comment, blank lines are ignored. Throws Error with
/// SyntaxError, UnknownDirective or MalformedNumber at line/column.
NetDocument parseDsl(std::string_view text);

/// Canonical DSL text; parseDsl(writeDsl(n)) rebuilds an equal net.
std::string writeDsl(const PetriNet& net);

/// P/T-net subset of PNML (pnml/net/page/place/transition/arc with
/// initialMarking and inscription). Graphics, name labels and toolspecific
/// blocks are skipped. Throws XmlError, UnsupportedNetType, DanglingArcRef or
/// MalformedNumber.
NetDocument parsePnml(std::string_view xml);

std::string writePnml(const PetriNet& net);

/// Picks the DSL or PNML reader by sniffing for a leading '<'.
NetDocument parseNetText(std::string_view text);

/// Reads a file and parses it by extension (.pnml / .xml) or content.
/// Throws Error(FileNotFound) when the file cannot be opened.
NetDocument loadNetDocument(const std::filesystem::path& file);

PetriNet loadNet(const std::filesystem::path& file);

std::string readTextFile(const std::filesystem::path& file);

/// Places as circles labelled "id (tokens)", transitions as boxes, arc
/// weights shown when not 1.
std::string writeDot(const PetriNet& net);

/// One node per state labelled with its nonzero marking entries, edges
/// labelled with transition ids; dead states drawn double.
std::string writeDot(const ReachabilityGraph& graph, const PetriNet& net);

}  // namespace petrikit
