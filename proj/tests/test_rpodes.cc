#include <gtest/gtest.h>

#include <ddet/checks.hh>
#include <ddet/errors.hh>
#include <ddet/generators.hh>
#include <ddet/observer.hh>
#include <ddet/rpodes.hh>

#include "fixtures.hh"

using namespace ddet;

TEST(Classify, ThreeStateIsNotRpo)
{
  Des e = fixtures::three_state();
  RpoReport r = classify_rpodes(e);
  EXPECT_FALSE(r.is_rpo);
  ASSERT_TRUE(r.po_violation);
  std::vector<StateId> cyc = *r.po_violation;
  std::sort(cyc.begin(), cyc.end());
  EXPECT_EQ(cyc, (std::vector<StateId>{1, 2}));
}

TEST(Classify, DagInstancesAreRpo)
{
  Dag g{4, {{0, 1}, {1, 3}, {0, 2}, {3, 2}}, 0, 3};
  RpoReport r = classify_rpodes(gen_from_dag(g).des);
  EXPECT_TRUE(r.is_rpo);
  EXPECT_FALSE(r.po_violation);
  EXPECT_FALSE(r.selfloop_violation);
}

TEST(Classify, ForbiddenPattern)
{
  Des d = DesBuilder()
            .event("a")
            .transition("q", "a", "q")
            .transition("q", "a", "p")
            .transition("p", "a", "p")
            .initial("q")
            .build();
  RpoReport r = classify_rpodes(d);
  EXPECT_FALSE(r.is_rpo);
  EXPECT_FALSE(r.po_violation);
  ASSERT_TRUE(r.selfloop_violation);
  EXPECT_EQ(d.state_name(r.selfloop_violation->first), "q");
  EXPECT_EQ(d.alphabet().name(r.selfloop_violation->second), "a");
}

TEST(Classify, HiddenEventsAreProjectedFirst)
{
  // q -u-> q2 -a-> q with a hidden u gives a cycle in the projection only
  // through q -a-> q, which is a self-loop, but q -a-> r leaves as well.
  Des d = DesBuilder()
            .event("a")
            .event("u", false)
            .transition("q", "u", "q2")
            .transition("q2", "a", "q")
            .transition("q", "a", "r")
            .transition("r", "a", "r")
            .initial("q")
            .build();
  RpoReport r = classify_rpodes(d);
  EXPECT_FALSE(r.is_rpo);
  EXPECT_TRUE(r.selfloop_violation || r.po_violation);
}

TEST(Classify, InvariantUnderRenaming)
{
  for (std::uint64_t seed = 1; seed <= 100; ++seed)
    {
      Des d = gen_random_des({seed, 5, 2, 0.8, 0.2});
      // reverse state order and rename everything
      std::vector<std::string> names;
      std::size_t n = d.state_count();
      for (std::size_t i = 0; i < n; ++i)
        names.push_back("r" + std::to_string(n - 1 - i));
      Alphabet sigma;
      for (EventId e = 0; e < d.alphabet().size(); ++e)
        sigma.add("z" + d.alphabet().name(e), d.alphabet().observable(e));
      std::vector<Transition> ts;
      for (const Transition& t : d.transitions())
        ts.push_back({StateId(n - 1 - t.source), t.event,
                      StateId(n - 1 - t.target)});
      std::vector<StateId> init;
      for (StateId q : d.initial())
        init.push_back(StateId(n - 1 - q));
      Des renamed(sigma, names, ts, init);
      EXPECT_EQ(classify_rpodes(d).is_rpo, classify_rpodes(renamed).is_rpo);
    }
}

TEST(RpoCheck, DagInstances)
{
  GeneratedInstance unreachable = gen_from_dag({2, {}, 0, 1});
  EXPECT_TRUE(check_rpodes_strong_periodic_d(unreachable.des,
                                             unreachable.spec)
                .periodic.holds);
  GeneratedInstance reachable = gen_from_dag({2, {{0, 1}}, 0, 1});
  RpoCheck c = check_rpodes_strong_periodic_d(reachable.des, reachable.spec);
  EXPECT_FALSE(c.periodic.holds);
  ASSERT_TRUE(c.periodic.witness);
  EXPECT_EQ(c.periodic.witness->cycle.size(), 1u);
  EXPECT_FALSE(c.strong.holds);
}

TEST(RpoCheck, ChainProbeSeparatesStrongFromPeriodic)
{
  Des d = fixtures::chain();
  Spec s = fixtures::chain_spec(d);
  ASSERT_TRUE(classify_rpodes(d).is_rpo);
  RpoCheck c = check_rpodes_strong_periodic_d(d, s);
  EXPECT_TRUE(c.periodic.holds);
  EXPECT_FALSE(c.strong.holds);
}

TEST(RpoCheck, RejectsNonRpo)
{
  Des e = fixtures::three_state();
  EXPECT_THROW(check_rpodes_strong_periodic_d(e, fixtures::three_state_spec(e)),
               input_error);
}

TEST(RpoCheck, RandomRpoAgreesWithGeneral)
{
  for (std::uint64_t seed = 1; seed <= 300; ++seed)
    {
      Des d = gen_random_rpodes(seed, 2 + seed % 6, 1 + seed % 3);
      ASSERT_TRUE(classify_rpodes(d).is_rpo) << seed;
      Rng rng(seed);
      Spec spec = gen_random_spec(rng, d, 0.2, true);
      RpoCheck c;
      ASSERT_NO_THROW(c = check_rpodes_strong_periodic_d(d, spec)) << seed;
      EXPECT_EQ(c.periodic.holds, strong_periodic_d(d, spec).holds) << seed;
      EXPECT_EQ(c.strong.holds, strong_d(d, spec).holds) << seed;

      Observer obs = expanded_observer(d);
      SccView v = scc_view(obs.graph());
      for (NodeId s = 0; s < obs.size(); ++s)
        EXPECT_EQ(v.component_size(v.component(s)), 1u) << seed;
    }
}
