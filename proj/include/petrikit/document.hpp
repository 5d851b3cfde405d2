#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "petrikit/error.hpp"

namespace petrikit {

// Unvalidated net description as it comes out of a parser. Numbers are kept
// signed so that buildNet, not the parser, decides what a negative count means.

struct PlaceDecl {
  std::string name;
  std::int64_t tokens = 0;
  SourceLocation where;
};

struct TransitionDecl {
  std::string name;
  SourceLocation where;
};

struct ArcDecl {
  std::string source;
  std::string target;
  std::int64_t weight = 1;
  SourceLocation where;
};

struct NetDocument {
  std::string name;
  SourceLocation where;
  std::vector<PlaceDecl> places;
  std::vector<TransitionDecl> transitions;
  std::vector<ArcDecl> arcs;
};

}  // namespace petrikit
