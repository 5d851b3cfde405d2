#include <expat.h>

#include <charconv>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "petrikit/formats.hpp"

namespace petrikit {

namespace {

std::string_view localName(std::string_view qualified) {
  // Expat is created without namespace processing; strip any prefix.
  auto colon = qualified.rfind(':');
  return colon == std::string_view::npos ? qualified : qualified.substr(colon + 1);
}

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

bool isPtNetType(std::string_view type) {
  if (type.empty()) return true;  // untyped nets are read as P/T
  return type.find("ptnet") != std::string_view::npos || type == "P/T net" ||
         type.find("pt-net") != std::string_view::npos;
}

class PnmlReader {
 public:
  explicit PnmlReader(std::string_view xml) : xml_(xml) {}

  NetDocument read() {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(XML_ParserCreate(nullptr),
                                                                        &XML_ParserFree);
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &PnmlReader::onStart, &PnmlReader::onEnd);
    XML_SetCharacterDataHandler(parser_, &PnmlReader::onText);
    const auto status = XML_Parse(parser_, xml_.data(), static_cast<int>(xml_.size()), 1);
    if (pending_) std::rethrow_exception(pending_);
    if (status == XML_STATUS_ERROR) {
      throw Error(ErrorCode::XmlError, XML_ErrorString(XML_GetErrorCode(parser_)), here());
    }
    if (!sawNet_) throw Error(ErrorCode::XmlError, "no <net> element found", {1, 1});
    checkArcRefs();
    return std::move(doc_);
  }

 private:
  enum class Owner { None, Place, Arc };

  SourceLocation here() const {
    return {static_cast<std::size_t>(XML_GetCurrentLineNumber(parser_)),
            static_cast<std::size_t>(XML_GetCurrentColumnNumber(parser_)) + 1};
  }

  static const char* attribute(const XML_Char** atts, std::string_view key) {
    for (int i = 0; atts[i]; i += 2) {
      if (localName(atts[i]) == key) return atts[i + 1];
    }
    return nullptr;
  }

  static void onStart(void* self, const XML_Char* name, const XML_Char** atts) {
    auto* r = static_cast<PnmlReader*>(self);
    if (r->pending_) return;
    try {
      r->start(localName(name), atts);
    } catch (...) {
      r->pending_ = std::current_exception();
      XML_StopParser(r->parser_, XML_FALSE);
    }
  }

  static void onEnd(void* self, const XML_Char* name) {
    auto* r = static_cast<PnmlReader*>(self);
    if (r->pending_) return;
    try {
      r->end(localName(name));
    } catch (...) {
      r->pending_ = std::current_exception();
      XML_StopParser(r->parser_, XML_FALSE);
    }
  }

  static void onText(void* self, const XML_Char* s, int len) {
    auto* r = static_cast<PnmlReader*>(self);
    if (r->capturing_) r->text_.append(s, static_cast<std::size_t>(len));
  }

  std::string requireId(const XML_Char** atts, std::string_view element) {
    const char* id = attribute(atts, "id");
    if (!id || !*id) {
      throw Error(ErrorCode::XmlError, "<" + std::string(element) + "> without id", here());
    }
    return id;
  }

  void start(std::string_view name, const XML_Char** atts) {
    if (skipDepth_ > 0) {
      ++skipDepth_;
      return;
    }
    if (netsDone_) return;

    if (name == "net") {
      if (inNet_) throw Error(ErrorCode::XmlError, "nested <net>", here());
      const char* type = attribute(atts, "type");
      if (type && !isPtNetType(type)) {
        throw Error(ErrorCode::UnsupportedNetType,
                    "net type '" + std::string(type) + "' is not a place/transition net", here());
      }
      const char* id = attribute(atts, "id");
      doc_.name = id ? id : "";
      doc_.where = here();
      inNet_ = true;
      sawNet_ = true;
      return;
    }
    if (!inNet_) return;

    if (name == "graphics" || name == "toolspecific" || name == "name") {
      skipDepth_ = 1;
    } else if (name == "place") {
      doc_.places.push_back({requireId(atts, name), 0, here()});
      owner_ = Owner::Place;
    } else if (name == "transition") {
      doc_.transitions.push_back({requireId(atts, name), here()});
      owner_ = Owner::None;
    } else if (name == "arc") {
      ArcDecl arc;
      arc.where = here();
      const char* src = attribute(atts, "source");
      const char* dst = attribute(atts, "target");
      if (!src || !dst) throw Error(ErrorCode::XmlError, "<arc> needs source and target", here());
      arc.source = src;
      arc.target = dst;
      doc_.arcs.push_back(std::move(arc));
      owner_ = Owner::Arc;
    } else if ((name == "initialMarking" && owner_ == Owner::Place) ||
               (name == "inscription" && owner_ == Owner::Arc)) {
      labelStart_ = here();
      text_.clear();
      inLabel_ = true;
    } else if (inLabel_ && (name == "text" || name == "value")) {
      capturing_ = true;
    }
  }

  void end(std::string_view name) {
    if (skipDepth_ > 0) {
      --skipDepth_;
      return;
    }
    if (netsDone_) return;
    if (name == "text" || name == "value") {
      capturing_ = false;
    } else if (inLabel_ && (name == "initialMarking" || name == "inscription")) {
      inLabel_ = false;
      const auto value = labelNumber();
      if (name == "initialMarking") doc_.places.back().tokens = value;
      else doc_.arcs.back().weight = value;
    } else if (name == "place" || name == "arc" || name == "transition") {
      owner_ = Owner::None;
    } else if (name == "net") {
      inNet_ = false;
      netsDone_ = true;  // only the first net of a file is read
    }
  }

  // "<text>3</text>" per PNML; "<value>Default,3</value>" per PIPE.
  std::int64_t labelNumber() {
    std::string s = trim(text_);
    if (auto comma = s.rfind(','); comma != std::string::npos) s = trim(s.substr(comma + 1));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::MalformedNumber, "malformed number '" + trim(text_) + "'",
                  labelStart_);
    }
    return value;
  }

  void checkArcRefs() const {
    std::set<std::string> ids;
    for (const auto& p : doc_.places) ids.insert(p.name);
    for (const auto& t : doc_.transitions) ids.insert(t.name);
    for (const auto& a : doc_.arcs) {
      for (const auto* ref : {&a.source, &a.target}) {
        if (!ids.count(*ref)) {
          throw Error(ErrorCode::DanglingArcRef, "arc refers to unknown node '" + *ref + "'",
                      a.where);
        }
      }
    }
  }

  std::string_view xml_;
  XML_Parser parser_ = nullptr;
  NetDocument doc_;
  std::exception_ptr pending_;
  int skipDepth_ = 0;
  bool inNet_ = false;
  bool sawNet_ = false;
  bool netsDone_ = false;
  bool inLabel_ = false;
  bool capturing_ = false;
  Owner owner_ = Owner::None;
  SourceLocation labelStart_;
  std::string text_;
};

std::string xmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

NetDocument parsePnml(std::string_view xml) { return PnmlReader(xml).read(); }

std::string writePnml(const PetriNet& net) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<pnml xmlns=\"http://www.pnml.org/version-2009/grammar/pnml\">\n"
      << "  <net id=\"" << xmlEscape(net.name())
      << "\" type=\"http://www.pnml.org/version-2009/grammar/ptnet\">\n"
      << "    <page id=\"page0\">\n";
  for (std::size_t p = 0; p < net.placeCount(); ++p) {
    const auto& id = net.placeName(PlaceId{p});
    out << "      <place id=\"" << xmlEscape(id) << "\">\n"
        << "        <name><text>" << xmlEscape(id) << "</text></name>\n";
    if (auto k = net.initialMarking()[PlaceId{p}]; k != 0) {
      out << "        <initialMarking><text>" << k << "</text></initialMarking>\n";
    }
    out << "      </place>\n";
  }
  for (const auto& t : net.transitionNames()) {
    out << "      <transition id=\"" << xmlEscape(t) << "\">\n"
        << "        <name><text>" << xmlEscape(t) << "</text></name>\n"
        << "      </transition>\n";
  }
  std::size_t n = 0;
  for (const auto& a : net.arcs()) {
    out << "      <arc id=\"a" << n++ << "\" source=\"" << xmlEscape(net.nodeName(a.source))
        << "\" target=\"" << xmlEscape(net.nodeName(a.target)) << "\"";
    if (a.weight == 1) {
      out << "/>\n";
    } else {
      out << ">\n        <inscription><text>" << a.weight << "</text></inscription>\n"
          << "      </arc>\n";
    }
  }
  out << "    </page>\n  </net>\n</pnml>\n";
  return out.str();
}

}  // namespace petrikit
