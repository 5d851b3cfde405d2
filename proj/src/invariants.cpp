#include "petrikit/invariants.hpp"

#include <algorithm>

#include <boost/dynamic_bitset.hpp>
#include <boost/integer/common_factor_rt.hpp>

namespace petrikit {

namespace {

using Support = boost::dynamic_bitset<>;

// One row of the working tableau [A | I]: the not-yet-eliminated part of
// y^T A and the multiplier vector y itself.
struct Row {
  std::vector<BigInt> residual;
  std::vector<BigInt> y;
  Support support;
};

void normalize(Row& r) {
  BigInt g = 0;
  for (const auto& x : r.residual) g = boost::multiprecision::gcd(g, BigInt(abs(x)));
  for (const auto& x : r.y) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (auto& x : r.residual) x /= g;
    for (auto& x : r.y) x /= g;
  }
}

// Keep rows whose multiplier support is minimal; equal supports at this
// point denote the same ray, so one representative survives.
std::vector<Row> pruneToMinimal(std::vector<Row> rows) {
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.support.count() < b.support.count();
  });
  std::vector<Row> kept;
  kept.reserve(rows.size());
  for (auto& r : rows) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const Row& k) {
      return k.support.is_subset_of(r.support);
    });
    if (!dominated) kept.push_back(std::move(r));
  }
  return kept;
}

bool supportLess(const Support& a, const Support& b) {
  // Lexicographic over indices 0..n-1 with absent < present.
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return b[i];
  }
  return false;
}

std::vector<Semiflow> toSemiflows(std::vector<std::vector<BigInt>> vectors, SemiflowKind kind) {
  std::vector<Semiflow> out;
  out.reserve(vectors.size());
  for (auto& v : vectors) out.push_back({kind, std::move(v)});
  return out;
}

}  // namespace

std::vector<std::size_t> Semiflow::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<BigInt>> minimalSemiflows(const std::vector<std::vector<BigInt>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return {};
  const std::size_t m = rows.front().size();

  std::vector<Row> table;
  table.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Row r{rows[i], std::vector<BigInt>(n, 0), Support(n)};
    r.y[i] = 1;
    r.support.set(i);
    normalize(r);
    table.push_back(std::move(r));
  }

  for (std::size_t col = 0; col < m; ++col) {
    std::vector<Row> next;
    std::vector<const Row*> pos;
    std::vector<const Row*> neg;
    for (const auto& r : table) {
      const int s = r.residual[col].sign();
      if (s == 0) next.push_back(r);
      else (s > 0 ? pos : neg).push_back(&r);
    }
    for (const Row* p : pos) {
      for (const Row* q : neg) {
        const BigInt a = -q->residual[col];
        const BigInt b = p->residual[col];
        Row r{std::vector<BigInt>(m), std::vector<BigInt>(n), p->support | q->support};
        for (std::size_t k = 0; k < m; ++k) r.residual[k] = a * p->residual[k] + b * q->residual[k];
        for (std::size_t k = 0; k < n; ++k) r.y[k] = a * p->y[k] + b * q->y[k];
        normalize(r);
        next.push_back(std::move(r));
      }
    }
    table = pruneToMinimal(std::move(next));
  }

  std::sort(table.begin(), table.end(), [](const Row& a, const Row& b) {
    if (a.support != b.support) return supportLess(a.support, b.support);
    return a.y < b.y;
  });
  std::vector<std::vector<BigInt>> out;
  out.reserve(table.size());
  for (auto& r : table) out.push_back(std::move(r.y));
  return out;
}

std::vector<Semiflow> pInvariants(const PetriNet& net) {
  const auto inc = incidence(net);
  std::vector<std::vector<BigInt>> rows(net.placeCount(),
                                        std::vector<BigInt>(net.transitionCount()));
  for (std::size_t p = 0; p < net.placeCount(); ++p) {
    for (std::size_t t = 0; t < net.transitionCount(); ++t) rows[p][t] = inc.combined(p, t);
  }
  return toSemiflows(minimalSemiflows(rows), SemiflowKind::Place);
}

std::vector<Semiflow> tInvariants(const PetriNet& net) {
  const auto inc = incidence(net);
  std::vector<std::vector<BigInt>> rows(net.transitionCount(),
                                        std::vector<BigInt>(net.placeCount()));
  for (std::size_t t = 0; t < net.transitionCount(); ++t) {
    for (std::size_t p = 0; p < net.placeCount(); ++p) rows[t][p] = inc.combined(p, t);
  }
  return toSemiflows(minimalSemiflows(rows), SemiflowKind::Transition);
}

std::vector<InvariantEquation> invariantEquations(const PetriNet& net) {
  return invariantEquations(net, pInvariants(net));
}

std::vector<InvariantEquation> invariantEquations(const PetriNet& net,
                                                  const std::vector<Semiflow>& pflows) {
  std::vector<InvariantEquation> out;
  out.reserve(pflows.size());
  for (const auto& y : pflows) {
    InvariantEquation eq{y.coeffs, 0};
    eq.constant = evaluate(eq, net.initialMarking());
    out.push_back(std::move(eq));
  }
  return out;
}

BigInt evaluate(const InvariantEquation& eq, const Marking& m) {
  BigInt sum = 0;
  for (std::size_t p = 0; p < eq.coeffs.size() && p < m.size(); ++p) {
    if (eq.coeffs[p] != 0) sum += eq.coeffs[p] * BigInt(m[PlaceId{p}]);
  }
  return sum;
}

bool holds(const InvariantEquation& eq, const Marking& m) {
  return evaluate(eq, m) == eq.constant;
}

CoverageReport coverage(const PetriNet& net) { return coverage(net, pInvariants(net)); }

CoverageReport coverage(const PetriNet& net, const std::vector<Semiflow>& pflows) {
  CoverageReport report;
  report.weights.assign(net.placeCount(), 0);
  for (const auto& y : pflows) {
    for (std::size_t p = 0; p < y.coeffs.size(); ++p) report.weights[p] += y.coeffs[p];
  }
  for (std::size_t p = 0; p < net.placeCount(); ++p) {
    if (report.weights[p] == 0) report.uncoveredPlaces.push_back(PlaceId{p});
  }
  report.covered = report.uncoveredPlaces.empty();
  return report;
}

std::string formatLeftSide(const PetriNet& net, const std::vector<BigInt>& coeffs) {
  std::string out;
  for (std::size_t p = 0; p < coeffs.size(); ++p) {
    if (coeffs[p] == 0) continue;
    if (!out.empty()) out += " + ";
    if (coeffs[p] != 1) out += coeffs[p].str() + "*";
    out += "M(" + net.placeName(PlaceId{p}) + ")";
  }
  return out.empty() ? "0" : out;
}

std::string formatEquation(const PetriNet& net, const InvariantEquation& eq) {
  return formatLeftSide(net, eq.coeffs) + " = " + eq.constant.str();
}

}  // namespace petrikit
