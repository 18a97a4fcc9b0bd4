#include <gtest/gtest.h>

#include <ddet/errors.hh>
#include <ddet/generators.hh>
#include <ddet/observer.hh>

#include "fixtures.hh"
#include "oracles.hh"

using namespace ddet;

TEST(Observer, ThreeStateSteps)
{
  Des e = fixtures::three_state();
  Observer obs(e);
  EventId a = *e.alphabet().find("a");
  EventId b = *e.alphabet().find("b");
  EXPECT_EQ(obs.step(Estimate{0, 1, 2}, a), (Estimate{0, 1, 2}));
  EXPECT_EQ(obs.step(Estimate{0, 1, 2}, b), (Estimate{1}));
  EXPECT_EQ(obs.step(Estimate{1}, a), (Estimate{2}));
  EXPECT_FALSE(obs.step(Estimate{1}, b));
}

TEST(Observer, StepRejectsUnknownStateAndHiddenEvent)
{
  Des d = DesBuilder()
            .event("a")
            .event("u", false)
            .transition("p", "u", "q")
            .transition("q", "a", "p")
            .initial("p")
            .build();
  Observer obs(d);
  EventId a = *d.alphabet().find("a");
  EventId u = *d.alphabet().find("u");
  EXPECT_THROW(obs.step(Estimate{1}, a), input_error);
  EXPECT_THROW(obs.step(Estimate{0, 1}, u), input_error);
  EXPECT_TRUE(obs.step(Estimate{0, 1}, a));
}

TEST(Observer, ThreeStateExpandsToThreeStates)
{
  Des e = fixtures::three_state();
  Observer obs = expanded_observer(e);
  EXPECT_EQ(obs.size(), 3u);
  EXPECT_EQ(obs.estimate(0), (Estimate{0, 1, 2}));
  EXPECT_TRUE(obs.find(Estimate{1}));
  EXPECT_TRUE(obs.find(Estimate{2}));
  EXPECT_EQ(obs.graph().arc_count(), 4u);
  EXPECT_FALSE(obs.invariant_violation());
}

TEST(Observer, BudgetIsEnforced)
{
  Des e = fixtures::three_state();
  Observer obs(e);
  EXPECT_THROW(obs.expand_all(2), budget_exceeded);
  Observer ok(e);
  EXPECT_NO_THROW(ok.expand_all(3));
  EXPECT_TRUE(ok.fully_expanded());
}

TEST(Observer, EncodedIntersectionHasSixStates)
{
  auto dfas = fixtures::odd_even();
  GeneratedInstance g = gen_from_dfa_intersection(dfas, true);
  Observer obs = expanded_observer(g.des);
  EXPECT_EQ(obs.size(), 6u);
}

TEST(Observer, TwoClauseFormulaHasNineStates)
{
  GeneratedInstance g = gen_from_3cnf(fixtures::phi1());
  Observer obs = expanded_observer(g.des);
  EXPECT_EQ(obs.size(), 9u);
}

TEST(Scc, ThreeStateComponents)
{
  Des e = fixtures::three_state();
  Observer obs = expanded_observer(e);
  SccView v = scc_view(obs.graph());
  NodeId top = *obs.find(Estimate{0, 1, 2});
  NodeId two = *obs.find(Estimate{1});
  NodeId three = *obs.find(Estimate{2});
  EXPECT_EQ(v.component_count(), 2u);
  EXPECT_TRUE(v.on_cycle(top));
  EXPECT_EQ(v.component(two), v.component(three));
  EXPECT_TRUE(v.on_cycle(two));
  EXPECT_NE(v.component(top), v.component(two));
}

TEST(Scc, EncodedIntersectionComponents)
{
  auto dfas = fixtures::odd_even();
  GeneratedInstance g = gen_from_dfa_intersection(dfas, true);
  Observer obs = expanded_observer(g.des);
  SccView v = scc_view(obs.graph());
  auto id = [&](std::initializer_list<const char*> names) {
    std::vector<StateId> s;
    for (auto n : names)
      s.push_back(*g.des.find_state(n));
    return *obs.find(Estimate(s));
  };
  NodeId m1 = id({"q-", "q1+"});
  NodeId m2 = id({"q-", "q2+"});
  NodeId init = id({"q-", "d1.a", "d2.d"});
  NodeId bc = id({"q-", "d1.b", "d2.c"});
  EXPECT_EQ(v.component(m1), v.component(m2));
  EXPECT_EQ(v.component_size(v.component(m1)), 2u);
  EXPECT_EQ(v.component(init), v.component(bc));
  EXPECT_EQ(v.component_size(v.component(init)), 4u);
  EXPECT_NE(v.component(init), v.component(m1));
}

TEST(Observer, LanguageMatchesEstimatesOnRandomSystems)
{
  for (std::uint64_t seed = 1; seed <= 200; ++seed)
    {
      Des d = gen_random_des({seed, 5, 3, 0.6, 0.25});
      Observer obs = expanded_observer(d);
      ASSERT_FALSE(obs.invariant_violation()) << *obs.invariant_violation();
      LabeledDigraph g = obs.graph();
      for (NodeId s = 0; s < g.size(); ++s)
        EXPECT_FALSE(g.arcs(s).empty()) << "dead observer state, seed " << seed;

      oracle::Raw raw(d);
      Rng rng(seed + 1000);
      auto events = d.alphabet().observable_events();
      for (int trial = 0; trial < 30; ++trial)
        {
          Observation w;
          std::size_t len = rng.below(8);
          for (std::size_t i = 0; i < len; ++i)
            w.push_back(events[rng.below(events.size())]);
          std::optional<Observer::StateNo> s = obs.initial();
          for (EventId e : w)
            if (s)
              s = obs.step(*s, e);
          oracle::Mask m = raw.run(w);
          ASSERT_EQ(s.has_value(), m != 0);
          if (s)
            ASSERT_EQ(obs.estimate(*s), oracle::to_estimate(m));
        }
      EXPECT_EQ(obs.size(), oracle::Reach(raw).nodes.size());
    }
}
