#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "petrikit/formats.hpp"

namespace petrikit {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based
};

bool isIdentifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

// Splits on whitespace and treats "->" as a token of its own so that
// "arc a->b" and "arc a -> b" read the same.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line.compare(i, 2, "->") == 0) {
      out.push_back({"->", i + 1});
      i += 2;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line.compare(i, 2, "->") != 0) {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line, std::size_t lineLength)
      : tokens_(std::move(tokens)), line_(line), end_(lineLength + 1) {}

  SourceLocation here() const {
    return {line_, pos_ < tokens_.size() ? tokens_[pos_].column : end_};
  }
  SourceLocation start() const { return {line_, tokens_.front().column}; }

  bool done() const { return pos_ >= tokens_.size(); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what, here());
  }

  std::string identifier(const char* role) {
    if (done()) fail(std::string("expected ") + role);
    if (!isIdentifier(tokens_[pos_].text)) {
      fail(std::string("invalid ") + role + " '" + tokens_[pos_].text + "'");
    }
    return tokens_[pos_++].text;
  }

  void expect(std::string_view word) {
    if (done() || tokens_[pos_].text != word) {
      fail("expected '" + std::string(word) + "'");
    }
    ++pos_;
  }

  bool accept(std::string_view word) {
    if (!done() && tokens_[pos_].text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t number(const char* role) {
    if (done()) fail(std::string("expected ") + role);
    const auto& tok = tokens_[pos_];
    std::int64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw Error(ErrorCode::MalformedNumber,
                  std::string("malformed ") + role + " '" + tok.text + "'", here());
    }
    ++pos_;
    return value;
  }

  void finish() {
    if (!done()) fail("unexpected '" + tokens_[pos_].text + "'");
  }

  const std::string& directive() { return tokens_[pos_++].text; }

 private:
  std::vector<Token> tokens_;
  std::size_t line_;
  std::size_t end_;
  std::size_t pos_ = 0;
};

}  // namespace

NetDocument parseDsl(std::string_view text) {
  NetDocument doc;
  bool named = false;
  std::size_t lineNo = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t nl = text.find('\n', offset);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(offset, nl - offset);
    offset = nl + 1;
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    LineParser p(std::move(tokens), lineNo, line.size());
    const SourceLocation where = p.start();
    const std::string directive = p.directive();

    if (directive == "net") {
      if (named) throw Error(ErrorCode::SyntaxError, "net name declared twice", where);
      doc.name = p.identifier("net name");
      doc.where = where;
      named = true;
    } else if (directive == "place") {
      PlaceDecl decl{p.identifier("place id"), 0, where};
      if (p.accept("tokens")) decl.tokens = p.number("token count");
      doc.places.push_back(std::move(decl));
    } else if (directive == "trans") {
      doc.transitions.push_back({p.identifier("transition id"), where});
    } else if (directive == "arc") {
      ArcDecl decl;
      decl.where = where;
      decl.source = p.identifier("arc source");
      p.expect("->");
      decl.target = p.identifier("arc target");
      if (p.accept("weight")) decl.weight = p.number("arc weight");
      doc.arcs.push_back(std::move(decl));
    } else {
      throw Error(ErrorCode::UnknownDirective, "unknown directive '" + directive + "'", where);
    }
    p.finish();
  }
  return doc;
}

namespace {

std::string sanitizedName(const std::string& name) {
  if (name.empty() || isIdentifier(name)) return name;
  std::string out;
  for (char c : name) {
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  }
  if (std::isdigit(static_cast<unsigned char>(out.front()))) out.insert(out.begin(), '_');
  return out;
}

}  // namespace

std::string writeDsl(const PetriNet& net) {
  std::ostringstream out;
  if (!net.name().empty()) out << "net " << sanitizedName(net.name()) << '\n';
  for (std::size_t p = 0; p < net.placeCount(); ++p) {
    out << "place " << net.placeName(PlaceId{p});
    if (auto k = net.initialMarking()[PlaceId{p}]; k != 0) out << " tokens " << k;
    out << '\n';
  }
  for (const auto& t : net.transitionNames()) out << "trans " << t << '\n';
  for (const auto& a : net.arcs()) {
    out << "arc " << net.nodeName(a.source) << " -> " << net.nodeName(a.target);
    if (a.weight != 1) out << " weight " << a.weight;
    out << '\n';
  }
  return out.str();
}

}  // namespace petrikit
