#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

#include <gtest/gtest.h>

#include <ddet/checks.hh>
#include <ddet/desf.hh>
#include <ddet/generators.hh>

#include "fixtures.hh"

using namespace ddet;
namespace fs = std::filesystem;

namespace
{
  struct Result
  {
    int status = -1;
    std::string out;
  };

  Result
  run(const std::string& args, const std::string& env = {})
  {
    std::string cmd = env + " \"" DDETECT_BIN "\" " + args + " 2>&1";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
      return r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p))
      r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  std::string
  ex(const std::string& name)
  {
    return "\"" + fixtures::example_path(name) + "\"";
  }

  bool
  has(const Result& r, const std::string& needle)
  {
    return r.out.find(needle) != std::string::npos;
  }

  class Cli : public ::testing::Test
  {
  protected:
    void SetUp() override
    {
      dir_ = fs::temp_directory_path()
             / ("ddetect-test-" + std::to_string(::getpid()));
      fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const
    {
      return (dir_ / name).string();
    }

    std::string write(const std::string& name, const std::string& text) const
    {
      std::ofstream(path(name)) << text;
      return path(name);
    }

    fs::path dir_;
  };
}

TEST_F(Cli, CheckThreeState)
{
  Result strong = run("check " + ex("three_state.desf") + " -p strong-d");
  EXPECT_EQ(strong.status, 1) << strong.out;
  EXPECT_TRUE(has(strong, "verdict: fails"));
  EXPECT_TRUE(has(strong, "witness: stem=; cycle=a"));

  Result weak = run("check " + ex("three_state.desf") + " -p weak-d");
  EXPECT_EQ(weak.status, 0) << weak.out;
  EXPECT_TRUE(has(weak, "verdict: holds"));
  EXPECT_TRUE(has(weak, "stem=b; cycle=a a"));
  EXPECT_TRUE(has(weak, "bound_n:"));
}

TEST_F(Cli, EnginesAgree)
{
  for (const char* engine : {"general", "detector"})
    EXPECT_EQ(run("check " + ex("three_state.desf") + " -p strong-d -e " + engine)
                .status,
              1)
      << engine;
  Result chain = run("check " + ex("chain.desf") + " -p strong-periodic-d");
  EXPECT_EQ(chain.status, 0) << chain.out;
  EXPECT_TRUE(has(chain, "engine: rpo"));
  EXPECT_EQ(run("check " + ex("chain.desf")
                + " -p strong-periodic-d -e general")
              .status,
            0);
  Result wrong = run("check " + ex("three_state.desf") + " -p strong-periodic-d -e unary");
  EXPECT_EQ(wrong.status, 2) << wrong.out;
}

TEST_F(Cli, UnaryEngineOnGeneratedFormula)
{
  std::string f = path("phi.desf");
  Result gen = run("generate 3cnf --formula \"(x|y)&(~x|y)\" -o " + f);
  ASSERT_EQ(gen.status, 0) << gen.out;
  Result c = run("check " + f + " -p strong-periodic-d");
  EXPECT_EQ(c.status, 0) << c.out;
  EXPECT_TRUE(has(c, "engine: unary"));
  EXPECT_TRUE(has(c, "period"));

  std::string g = path("phi2.desf");
  ASSERT_EQ(run("generate 3cnf --formula \"x&~x\" -o " + g).status, 0);
  EXPECT_EQ(run("check " + g + " -p strong-periodic-d").status, 1);
}

TEST_F(Cli, PlainDetectability)
{
  Result r = run("check " + ex("three_state.desf") + " -p strong-det");
  EXPECT_EQ(r.status, 1) << r.out;
  Result h = run("check " + ex("hidden.desf") + " -p weak-det");
  EXPECT_TRUE(h.status == 0 || h.status == 1) << h.out;
}

TEST_F(Cli, Replay)
{
  Result ok = run("check " + ex("three_state.desf") + " -p strong-d --replay \"stem=b; cycle=a a\"");
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_TRUE(has(ok, "replay: consistent"));
  Result bad = run("check " + ex("three_state.desf") + " -p strong-d --replay \"stem=b; cycle=a\"");
  EXPECT_EQ(bad.status, 1) << bad.out;
  EXPECT_TRUE(has(bad, "replay: inconsistent"));
}

TEST_F(Cli, ObserverAndDetector)
{
  Result o = run("observer " + ex("three_state.desf"));
  EXPECT_EQ(o.status, 0);
  EXPECT_TRUE(has(o, "states: 3"));
  EXPECT_TRUE(has(o, "transitions: 4"));
  EXPECT_TRUE(has(o, "{1,2,3} violating"));
  Result d = run("detector " + ex("three_state.desf"));
  EXPECT_EQ(d.status, 0);
  EXPECT_TRUE(has(d, "states: 6"));
  EXPECT_TRUE(has(d, "transitions: 11"));
  Result dot = run("observer --dot " + ex("three_state.desf"));
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(run("project --dot " + ex("hidden.desf")).status, 0);
  Result cls = run("classify " + ex("three_state.desf"));
  EXPECT_EQ(cls.status, 0);
  EXPECT_TRUE(has(cls, "rpoDES: no"));
}

TEST_F(Cli, ParseErrorsExitTwo)
{
  std::string bad = write("bad.desf", "desf 1\nevents: a:o\nstates: p\n"
                                      "initial: q\n");
  Result r = run("check " + bad + " -p strong-d");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(has(r, "line 4, column 10"));
  EXPECT_EQ(run("check " + ex("three_state.desf") + " -p nonsense").status, 2);
  EXPECT_EQ(run("check /nonexistent.desf -p strong-d").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  std::string dead = write("dead.desf", "desf 1\nevents: a:o\nstates: p q\n"
                                        "initial: p\ntrans: p a q\n");
  EXPECT_EQ(run("check " + dead + " -p strong-d").status, 2);
  EXPECT_EQ(run("check " + dead + " -p strong-d --force").status, 0);
}

TEST_F(Cli, BudgetExitsThree)
{
  std::string f = path("phi.desf");
  ASSERT_EQ(run("generate 3cnf --formula \"(x|y)&(~x|y)\" -o " + f).status, 0);
  EXPECT_EQ(run("check " + f + " -p strong-periodic-d --max-unary-steps 4")
              .status,
            3);
  EXPECT_EQ(run("check " + f + " -p strong-d --max-observer-states 2").status,
            3);
  EXPECT_EQ(
    run("check " + f + " -p strong-d", "DDETECT_MAX_OBSERVER_STATES=2").status,
    3);
  EXPECT_EQ(
    run("check " + f + " -p strong-d", "DDETECT_MAX_OBSERVER_STATES=x").status,
    2);
}

TEST_F(Cli, GenerateMatchesLibrary)
{
  std::string f = path("dag.desf");
  ASSERT_EQ(run("generate dag --vertices 3 --edges \"0-1,1-2\" --target 2 -o "
                + f)
              .status,
            0);
  DesfDocument doc = read_desf_file(f);
  GeneratedInstance lib = gen_from_dag({3, {{0, 1}, {1, 2}}, 0, 2});
  EXPECT_EQ(doc.des, lib.des);
  EXPECT_EQ(doc.spec, lib.spec);
  EXPECT_EQ(run("check " + f + " -p strong-d").status, 1);

  std::string inter = path("inter.desf");
  Result r = run("generate intersection --encode --dfas " + ex("odd_length.desf")
              + " " + ex("even_length.desf") + " -o " + inter);
  ASSERT_EQ(r.status, 0) << r.out;
  DesfDocument idoc = read_desf_file(inter);
  EXPECT_EQ(idoc.des, gen_from_dfa_intersection(fixtures::odd_even(), true).des);
  EXPECT_EQ(run("check " + inter + " -p strong-periodic-d").status, 0);

  Result rnd = run("generate random --seed 7 --states 5 --events 2");
  ASSERT_EQ(rnd.status, 0);
  EXPECT_EQ(rnd.out, run("generate random --seed 7 --states 5 --events 2").out);
  EXPECT_NO_THROW(parse_desf(rnd.out));
  Result rpo = run("generate rpo --seed 3 --states 6 --events 2");
  ASSERT_EQ(rpo.status, 0);
  EXPECT_TRUE(has(run("classify " + write("rpo.desf", rpo.out)), "rpoDES: yes"));

  EXPECT_EQ(run("generate dag --vertices 2 --edges \"0-1,1-0\" --target 1")
              .status,
            2);
}
