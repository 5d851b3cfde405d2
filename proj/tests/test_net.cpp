#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "petrikit/formats.hpp"
#include "petrikit/net.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace petrikit;

namespace {

Marking markingWith(const PetriNet& net, std::initializer_list<const char*> ones) {
  Marking m(net.placeCount());
  for (const char* p : ones) m[net.place(p)] = 1;
  return m;
}

ErrorCode buildError(std::string_view text) {
  try {
    fixtures::dsl(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST_CASE("buildNet on the bundled example") {
  const auto& net = fixtures::bakingSoda();
  CHECK(net.name() == "bakingsoda");
  CHECK(net.placeCount() == 18);
  CHECK(net.transitionCount() == 7);
  CHECK(net.arcs().size() == 25);
  CHECK(net.placeName(PlaceId{2}) == "P10");
  CHECK(net.transitionName(TransitionId{3}) == "T4");
  CHECK(net.initialMarking() == markingWith(net, {"P0", "P1", "P2", "P6", "P10"}));
}

TEST_CASE("buildNet empty description") {
  const auto net = buildNet(NetDocument{});
  CHECK(net.placeCount() == 0);
  CHECK(net.transitionCount() == 0);
  CHECK(net.initialMarking().size() == 0);
}

TEST_CASE("buildNet rejects invalid descriptions") {
  CHECK(buildError("place P0\nplace P3\ntrans T0\narc P0 -> P3") == ErrorCode::NonBipartiteArc);
  CHECK(buildError("place a\ntrans t\ntrans u\narc t -> u") == ErrorCode::NonBipartiteArc);
  CHECK(buildError("place a\nplace a") == ErrorCode::DuplicateId);
  CHECK(buildError("place a\ntrans a") == ErrorCode::DuplicateId);
  CHECK(buildError("place a\ntrans t\narc a -> u") == ErrorCode::UnknownEndpoint);
  CHECK(buildError("place a\ntrans t\narc a -> t weight 0") == ErrorCode::ZeroWeight);
  CHECK(buildError("place a\ntrans t\narc a -> t weight -2") == ErrorCode::ZeroWeight);
  CHECK(buildError("place a tokens -1") == ErrorCode::NegativeTokens);
  CHECK(buildError("place a\ntrans t\narc a -> t\narc a -> t") == ErrorCode::DuplicateArc);
}

TEST_CASE("build errors carry the declaring line") {
  try {
    fixtures::dsl("net x\nplace a\n\nplace a\n");
    FAIL("expected DuplicateId");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateId);
    CHECK(e.location().line == 4);
  }
}

TEST_CASE("incidence of the bundled example") {
  const auto& net = fixtures::bakingSoda();
  const auto inc = incidence(net);
  auto P = [&](const char* n) { return net.place(n); };
  auto T = [&](const char* n) { return net.transition(n); };
  CHECK(inc(P("P0"), T("T0")) == -1);
  CHECK(inc(P("P3"), T("T0")) == 1);
  CHECK(inc(P("P3"), T("T4")) == -1);
  CHECK(inc(P("P12"), T("T5")) == 1);
  for (std::size_t t = 0; t < net.transitionCount(); ++t) {
    CHECK(inc.backward(P("P12").value, t) == 0);
  }
  CHECK(inc.combined.rows() == 18);
  CHECK(inc.combined.cols() == 7);
}

TEST_CASE("incidence of the empty net is 0x0") {
  const auto inc = incidence(PetriNet{});
  CHECK(inc.forward.rows() == 0);
  CHECK(inc.backward.cols() == 0);
  CHECK(inc.combined.rows() == 0);
}

TEST_CASE("incidence agrees with the arc-list oracle on random nets") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto net = fixtures::randomNet(rng);
    const auto inc = incidence(net);
    const auto ref = oracle::effectMatrix(net);
    for (std::size_t p = 0; p < net.placeCount(); ++p) {
      for (std::size_t t = 0; t < net.transitionCount(); ++t) {
        CHECK(inc.combined(p, t) == ref[p][t]);
        CHECK(inc.combined(p, t) == static_cast<std::int64_t>(inc.forward(p, t)) -
                                        static_cast<std::int64_t>(inc.backward(p, t)));
      }
    }
  }
}

TEST_CASE("enabled transitions") {
  const auto& net = fixtures::bakingSoda();
  CHECK(namesOf(net, enabled(net, net.initialMarking())) == std::vector<std::string>{"T0", "T1"});

  const auto dead = markingWith(net, {"P12", "P13", "P14", "P16", "P17", "P18"});
  CHECK(enabled(net, dead).empty());

  CHECK_THROWS_AS(enabled(net, Marking(3)), Error);

  const auto src = fixtures::dsl("place p\ntrans gen\ntrans use\narc gen -> p\narc p -> use");
  CHECK(namesOf(src, enabled(src, Marking(1))) == std::vector<std::string>{"gen"});
}

TEST_CASE("enabled does not mutate its inputs") {
  const auto& net = fixtures::bakingSoda();
  const Marking before = net.initialMarking();
  (void)enabled(net, before);
  CHECK(before == net.initialMarking());
}

TEST_CASE("fire") {
  const auto& net = fixtures::bakingSoda();
  const auto after = fire(net, net.initialMarking(), net.transition("T0"));
  CHECK(after == markingWith(net, {"P1", "P2", "P3", "P4", "P6", "P10"}));

  SUBCASE("disabled transition reports deficient places") {
    try {
      fire(net, net.initialMarking(), net.transition("T2"));
      FAIL("expected NotEnabled");
    } catch (const NotEnabledError& e) {
      CHECK(e.transition() == "T2");
      CHECK(e.deficientPlaces() == std::vector<std::string>{"P4", "P5"});
    }
  }

  SUBCASE("unknown transition") {
    CHECK_THROWS_AS(net.transition("T9"), Error);
    CHECK_THROWS_AS(fire(net, net.initialMarking(), TransitionId{99}), Error);
  }

  SUBCASE("self loop leaves the marking unchanged") {
    const auto loop = fixtures::dsl("place p tokens 1\ntrans t\narc p -> t\narc t -> p");
    CHECK(fire(loop, loop.initialMarking(), TransitionId{0}) == loop.initialMarking());
  }

  SUBCASE("weights") {
    const auto w = fixtures::dsl("place a tokens 3\nplace b\ntrans t\narc a -> t weight 2\narc t -> b weight 5");
    const auto m = fire(w, w.initialMarking(), TransitionId{0});
    CHECK(m[PlaceId{0}] == 1);
    CHECK(m[PlaceId{1}] == 5);
    CHECK_THROWS_AS(fire(w, m, TransitionId{0}), NotEnabledError);
  }
}

TEST_CASE("fireSequence") {
  const auto& net = fixtures::bakingSoda();
  const std::vector<std::string> deadlockOrder{"T0", "T1", "T2", "T4", "T5", "T6", "T7"};
  const std::vector<std::string> swapped{"T1", "T0", "T2", "T4", "T5", "T6", "T7"};
  const auto end = fireSequence(net, net.initialMarking(), transitionsByName(net, deadlockOrder));
  CHECK(end == markingWith(net, {"P12", "P13", "P14", "P16", "P17", "P18"}));
  CHECK(fireSequence(net, net.initialMarking(), transitionsByName(net, swapped)) == end);
  CHECK(fireSequence(net, net.initialMarking(), {}) == net.initialMarking());

  const std::vector<std::string> bad{"T0", "T1", "T5"};
  try {
    fireSequence(net, net.initialMarking(), transitionsByName(net, bad));
    FAIL("expected NotEnabled");
  } catch (const NotEnabledError& e) {
    CHECK(e.position() == std::optional<std::size_t>{2});
    CHECK(e.transition() == "T5");
  }
}

TEST_CASE("firing equation, monotonicity and commutation on random nets") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto net = fixtures::randomNet(rng);
    const auto inc = incidence(net);
    const auto run = fixtures::randomRun(net, rng, 20);
    Marking m = net.initialMarking();
    for (auto t : run) {
      const auto next = fire(net, m, t);
      for (std::size_t p = 0; p < net.placeCount(); ++p) {
        CHECK(static_cast<std::int64_t>(next[PlaceId{p}]) -
                  static_cast<std::int64_t>(m[PlaceId{p}]) ==
              inc.combined(p, t.value));
      }
      Marking bigger = m;
      for (std::size_t p = 0; p < net.placeCount(); ++p) bigger[PlaceId{p}] += p % 2;
      CHECK(isEnabled(net, bigger, t));

      const auto ready = enabled(net, m);
      for (auto u : ready) {
        bool shared = false;
        for (const auto& a : net.preset(t))
          for (const auto& b : net.preset(u)) shared |= a.place == b.place;
        if (shared || u == t) continue;
        CHECK(fire(net, fire(net, m, t), u) == fire(net, fire(net, m, u), t));
      }
      m = next;
    }
  }
}
