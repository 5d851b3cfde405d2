#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "petrikit/net.hpp"

namespace petrikit {

using BigInt = boost::multiprecision::cpp_int;

enum class SemiflowKind { Place, Transition };

/// Nonnegative integer annihilator of the incidence matrix with minimal
/// support and gcd-normalized coefficients. Place-kind vectors are indexed by
/// place, transition-kind vectors by transition.
struct Semiflow {
  SemiflowKind kind = SemiflowKind::Place;
  std::vector<BigInt> coeffs;

  std::vector<std::size_t> support() const;

  friend bool operator==(const Semiflow&, const Semiflow&) = default;
};

/// y . M = constant for every marking reachable from the initial one.
struct InvariantEquation {
  std::vector<BigInt> coeffs;
  BigInt constant;
};

struct CoverageReport {
  bool covered = true;
  std::vector<PlaceId> uncoveredPlaces;
  /// Sum of all P-semiflows; strictly positive exactly when covered.
  std::vector<BigInt> weights;

  bool structurallyBounded() const { return covered; }
  bool conservative() const { return covered; }
};

/// All minimal-support P-semiflows, ordered by support bit-vector
/// (place index 0 first, absent < present) then by coefficients.
std::vector<Semiflow> pInvariants(const PetriNet& net);

/// All minimal-support T-semiflows, same ordering over transitions.
std::vector<Semiflow> tInvariants(const PetriNet& net);

/// Minimal-support nonnegative solutions of y^T A = 0 for a rows x cols
/// integer matrix A, via Farkas elimination on [A | I]. Exposed for testing.
std::vector<std::vector<BigInt>> minimalSemiflows(const std::vector<std::vector<BigInt>>& rows);

std::vector<InvariantEquation> invariantEquations(const PetriNet& net);
std::vector<InvariantEquation> invariantEquations(const PetriNet& net,
                                                  const std::vector<Semiflow>& pflows);

BigInt evaluate(const InvariantEquation& eq, const Marking& m);
bool holds(const InvariantEquation& eq, const Marking& m);

CoverageReport coverage(const PetriNet& net);
CoverageReport coverage(const PetriNet& net, const std::vector<Semiflow>& pflows);

/// "M(P10) + M(P11) + M(P12) = 1", terms in place declaration order,
/// non-unit coefficients written as "2*M(P)".
std::string formatEquation(const PetriNet& net, const InvariantEquation& eq);

/// Same rendering without the right-hand side.
std::string formatLeftSide(const PetriNet& net, const std::vector<BigInt>& coeffs);

}  // namespace petrikit
