#include <gtest/gtest.h>

#include <ddet/checks.hh>
#include <ddet/errors.hh>
#include <ddet/generators.hh>

#include "fixtures.hh"
#include "oracles.hh"

using namespace ddet;

namespace
{
  constexpr Property all_properties[] = {Property::strong, Property::weak,
                                         Property::strong_periodic,
                                         Property::weak_periodic};

  Observation
  events(const Des& d, const char* text)
  {
    return parse_observation(d, text);
  }

  // Confirms a verdict against the definition: the property must hold with
  // the reported bound, or fail for every n; witnesses must replay.
  void
  confirm(const Des& d, const Spec& spec, Property p, const Verdict& v,
          const std::string& ctx)
  {
    oracle::Raw raw(d);
    oracle::Reach reach(raw);
    oracle::Decision truth = oracle::decide(d, spec, p);
    ASSERT_EQ(v.holds, truth.holds) << ctx << " " << to_string(p);
    ASSERT_EQ(v.bound_n.has_value(), v.holds) << ctx;
    if (v.holds)
      EXPECT_TRUE(oracle::holds_with(reach, spec, p, *v.bound_n))
        << ctx << " " << to_string(p) << " bound " << *v.bound_n;

    bool weak = p == Property::weak || p == Property::weak_periodic;
    ASSERT_EQ(v.witness.has_value(), v.holds == weak) << ctx;
    if (!v.witness)
      return;
    auto trace = oracle::replay(d, *v.witness);
    ASSERT_TRUE(trace) << ctx << " witness does not replay";
    std::size_t stem = v.witness->stem.size();
    std::size_t cyc = v.witness->cycle.size();
    auto bad_at = [&](std::size_t i) {
      return oracle::violating((*trace)[i], spec);
    };
    switch (p)
      {
      case Property::strong:
        EXPECT_TRUE(bad_at(trace->size() - 1)) << ctx;
        break;
      case Property::strong_periodic:
        for (std::size_t i = stem; i <= stem + cyc; ++i)
          EXPECT_TRUE(bad_at(i)) << ctx;
        break;
      case Property::weak:
        for (std::size_t i = stem; i <= stem + cyc; ++i)
          EXPECT_FALSE(bad_at(i)) << ctx;
        break;
      case Property::weak_periodic:
        {
          bool some = false;
          for (std::size_t i = stem; i < stem + cyc; ++i)
            some = some || !bad_at(i);
          EXPECT_TRUE(some) << ctx;
          break;
        }
      }
  }
}

TEST(Checks, ThreeState)
{
  Des e = fixtures::three_state();
  Spec s = fixtures::three_state_spec(e);

  Verdict strong = strong_d(e, s);
  EXPECT_FALSE(strong.holds);
  EXPECT_FALSE(strong.bound_n);

  Verdict sp = strong_periodic_d(e, s);
  EXPECT_FALSE(sp.holds);
  ASSERT_TRUE(sp.witness);
  EXPECT_TRUE(sp.witness->stem.empty());
  EXPECT_EQ(sp.witness->cycle, events(e, "a"));

  Verdict weak = weak_d(e, s);
  EXPECT_TRUE(weak.holds);
  ASSERT_TRUE(weak.witness);
  EXPECT_EQ(weak.witness->stem, events(e, "b"));
  EXPECT_EQ(weak.witness->cycle, events(e, "a a"));

  EXPECT_TRUE(weak_periodic_d(e, s).holds);
}

TEST(Checks, EmptySpecHoldsEverywhere)
{
  Des e = fixtures::three_state();
  for (Property p : all_properties)
    EXPECT_TRUE(check(p, e, Spec{}).holds) << to_string(p);
}

TEST(Checks, FullReflexiveSpecFailsEverywhere)
{
  Des e = fixtures::three_state();
  std::vector<Spec::Pair> all;
  for (StateId p = 0; p < 3; ++p)
    for (StateId q = 0; q < 3; ++q)
      all.emplace_back(p, q);
  Spec s(all);
  for (Property p : all_properties)
    EXPECT_FALSE(check(p, e, s).holds) << to_string(p);
}

TEST(Checks, SingleViolatingLoopFailsWeakPeriodic)
{
  Des d = DesBuilder().event("a").transition("q", "a", "q").initial("q")
            .build();
  Spec s({{0, 0}});
  EXPECT_FALSE(weak_periodic_d(d, s).holds);
}

TEST(Checks, ChainProbe)
{
  Des d = fixtures::chain();
  Spec s = fixtures::chain_spec(d);
  Verdict strong = strong_d(d, s);
  EXPECT_FALSE(strong.holds);
  ASSERT_TRUE(strong.witness);
  EXPECT_EQ(strong.witness->cycle, events(d, "a"));
  EXPECT_EQ(strong.witness->continuation, events(d, "b"));
  EXPECT_TRUE(strong_periodic_d(d, s).holds);
  for (Property p : all_properties)
    confirm(d, s, p, check(p, d, s), "chain");
}

TEST(Checks, EncodedIntersection)
{
  auto dfas = fixtures::odd_even();
  GeneratedInstance g = gen_from_dfa_intersection(dfas, true);
  EXPECT_TRUE(strong_periodic_d(g.des, g.spec).holds);
  for (Property p : all_properties)
    confirm(g.des, g.spec, p, check(p, g.des, g.spec), "encoded");
}

TEST(Checks, AssumptionsAreEnforced)
{
  Des dead = DesBuilder().event("a").transition("p", "a", "q").initial("p")
               .build();
  EXPECT_THROW(strong_d(dead, Spec{}), input_error);
  CheckOptions lax;
  lax.require_assumptions = false;
  EXPECT_NO_THROW(strong_d(dead, Spec{}, lax));
  EXPECT_THROW(strong_d(fixtures::three_state(), Spec({{0, 9}})), input_error);
}

TEST(Checks, BudgetIsReported)
{
  CheckOptions small;
  small.max_observer_states = 1;
  EXPECT_THROW(strong_d(fixtures::three_state(), Spec{}, small), budget_exceeded);
}

TEST(Checks, DefinitionReplayOnRandomSystems)
{
  for (std::uint64_t seed = 1; seed <= 150; ++seed)
    {
      Des d = gen_random_des({seed, 1 + seed % 4, 1 + seed % 3, 0.7, 0.3});
      Rng rng(seed * 31);
      Spec spec = gen_random_spec(rng, d, 0.25, seed % 5 == 0);
      for (Property p : all_properties)
        confirm(d, spec, p, check(p, d, spec),
                "seed " + std::to_string(seed));
    }
}

TEST(Checks, ImplicationLattice)
{
  for (std::uint64_t seed = 1; seed <= 300; ++seed)
    {
      Des d = gen_random_des({seed, 5, 3, 0.6, 0.2});
      Rng rng(seed);
      Spec spec = gen_random_spec(rng, d, 0.2);
      bool s = strong_d(d, spec).holds;
      bool sp = strong_periodic_d(d, spec).holds;
      bool w = weak_d(d, spec).holds;
      bool wp = weak_periodic_d(d, spec).holds;
      EXPECT_TRUE(!s || sp) << seed;
      EXPECT_TRUE(!s || w) << seed;
      EXPECT_TRUE(!sp || wp) << seed;
      EXPECT_TRUE(!w || wp) << seed;
    }
}

TEST(Checks, UnaryWeakEqualsStrong)
{
  for (std::uint64_t seed = 1; seed <= 200; ++seed)
    {
      Des d = gen_random_des({seed, 6, 2, 0.5, 0.25});
      if (!is_unary(d))
        continue;
      Rng rng(seed);
      for (const Spec& spec :
           {gen_random_spec(rng, d, 0.2), detectability_spec(d)})
        {
          EXPECT_EQ(weak_d(d, spec).holds, strong_d(d, spec).holds) << seed;
          EXPECT_EQ(weak_periodic_d(d, spec).holds,
                    strong_periodic_d(d, spec).holds)
            << seed;
        }
    }
}

TEST(Checks, WitnessIsLexLeastShortest)
{
  // Both a and b reach violating self-loops; a is first in event order.
  Des d = DesBuilder()
            .event("a")
            .event("b")
            .transition("0", "a", "1")
            .transition("0", "a", "2")
            .transition("0", "b", "1")
            .transition("0", "b", "2")
            .transition("1", "a", "1")
            .transition("2", "a", "2")
            .transition("1", "b", "1")
            .transition("2", "b", "2")
            .initial("0")
            .build();
  Spec s({{1, 2}});
  Verdict v = strong_periodic_d(d, s);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->stem, events(d, "a"));
  EXPECT_EQ(v.witness->cycle, events(d, "a"));
}
