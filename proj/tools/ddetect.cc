// Command-line front end.  Exit codes: 0 property holds (or command
// succeeded), 1 property fails, 2 parse or validation error, 3 budget
// exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <ddet/checks.hh>
#include <ddet/desf.hh>
#include <ddet/detector.hh>
#include <ddet/dot.hh>
#include <ddet/errors.hh>
#include <ddet/generators.hh>
#include <ddet/observer.hh>
#include <ddet/rpodes.hh>
#include <ddet/unary.hh>

using namespace ddet;

namespace
{
  constexpr int exit_holds = 0;
  constexpr int exit_fails = 1;
  constexpr int exit_input = 2;
  constexpr int exit_budget = 3;

  struct PropertyChoice
  {
    Property property;
    bool plain;
  };

  const std::map<std::string, PropertyChoice> property_names = {
    {"strong-d", {Property::strong, false}},
    {"weak-d", {Property::weak, false}},
    {"strong-periodic-d", {Property::strong_periodic, false}},
    {"weak-periodic-d", {Property::weak_periodic, false}},
    {"strong-det", {Property::strong, true}},
    {"weak-det", {Property::weak, true}},
    {"strong-periodic-det", {Property::strong_periodic, true}},
    {"weak-periodic-det", {Property::weak_periodic, true}},
  };

  std::size_t
  env_budget(const char* name, std::size_t fallback)
  {
    const char* v = std::getenv(name);
    if (!v || !*v)
      return fallback;
    try
      {
        std::size_t used = 0;
        unsigned long long n = std::stoull(v, &used);
        if (used != std::string(v).size() || n == 0)
          throw std::invalid_argument(v);
        return std::size_t(n);
      }
    catch (const std::exception&)
      {
        throw input_error(std::string("invalid value for ") + name);
      }
  }

  struct Budgets
  {
    std::size_t observer = 0;
    std::size_t unary = 0;
  };

  void
  add_budget_flags(CLI::App* cmd, Budgets& b)
  {
    cmd->add_option("--max-observer-states", b.observer,
                    "Observer state budget (env DDETECT_MAX_OBSERVER_STATES)")
      ->check(CLI::PositiveNumber);
    cmd->add_option("--max-unary-steps", b.unary,
                    "Unary profile step budget (env DDETECT_MAX_UNARY_STEPS)")
      ->check(CLI::PositiveNumber);
  }

  CheckOptions
  resolve(const Budgets& b, bool force)
  {
    CheckOptions o;
    o.max_observer_states
      = b.observer ? b.observer
                   : env_budget("DDETECT_MAX_OBSERVER_STATES",
                                default_observer_budget);
    o.max_unary_steps
      = b.unary ? b.unary
                : env_budget("DDETECT_MAX_UNARY_STEPS", default_unary_budget);
    o.require_assumptions = !force;
    return o;
  }

  void
  print_verdict(const Des& des, const Verdict& v)
  {
    std::cout << "verdict: " << (v.holds ? "holds" : "fails") << '\n';
    if (v.bound_n)
      std::cout << "bound_n: " << *v.bound_n << '\n';
    if (v.witness)
      std::cout << "witness: " << format_lasso(des, *v.witness) << '\n';
  }

  // check ------------------------------------------------------------------

  struct CheckArgs
  {
    std::string file;
    std::string property;
    std::string engine = "auto";
    std::string replay;
    bool force = false;
    Budgets budgets;
  };

  int
  replay(const Des& des, const Spec& spec, const std::string& text)
  {
    Lasso l = parse_lasso(des, text);
    Observation prefix = l.stem;
    auto show = [&](const char* tag, const Observation& o) {
      Estimate e = estimate(des, o);
      std::cout << tag << ' ' << format_observation(des, o) << " -> "
                << format_estimate(des, e)
                << (e.empty()              ? " (not generated)"
                    : is_violating(e, spec) ? " violating"
                                            : " free")
                << '\n';
      return e;
    };
    Estimate anchor = show("stem", prefix);
    bool ok = !anchor.empty();
    for (EventId e : l.cycle)
      {
        prefix.push_back(e);
        ok = !show("cycle", prefix).empty() && ok;
      }
    Estimate closed = estimate(des, prefix);
    for (EventId e : l.continuation)
      {
        prefix.push_back(e);
        ok = !show("then", prefix).empty() && ok;
      }
    ok = ok && closed == anchor;
    std::cout << "replay: " << (ok ? "consistent" : "inconsistent") << '\n';
    return ok ? exit_holds : exit_fails;
  }

  int
  run_check(const CheckArgs& a)
  {
    DesfDocument doc = read_desf_file(a.file);
    const Des& des = doc.des;
    auto choice = property_names.at(a.property);
    Spec spec = choice.plain ? detectability_spec(des) : doc.spec;
    CheckOptions opts = resolve(a.budgets, a.force);

    if (!a.replay.empty())
      return replay(des, spec, a.replay);

    std::string engine = a.engine;
    bool periodic = choice.property == Property::strong_periodic;
    bool strong = choice.property == Property::strong;
    if (engine == "auto")
      {
        engine = "general";
        if (periodic && is_unary(des))
          engine = "unary";
        else if (periodic && classify_rpodes(des).is_rpo)
          engine = "rpo";
      }

    Verdict v;
    std::ostringstream extra;
    if (engine == "general")
      v = check(choice.property, des, spec, opts);
    else if (engine == "detector")
      {
        if (!(strong || (periodic && choice.plain)))
          throw input_error("the detector engine decides strong-d, "
                            "strong-det and strong-periodic-det only");
        enforce_assumptions(des, opts);
        if (choice.plain)
          v = check_strong_detectability(des, periodic, opts);
        else
          v = check_strong_d_via_detector(des, spec, opts);
      }
    else if (engine == "unary")
      {
        if (!periodic)
          throw input_error("the unary engine decides the strong periodic "
                            "properties only");
        UnaryCheck u = check_unary_strong_periodic_d(des, spec, opts);
        v = u.verdict;
        extra << "profile: tail=" << u.profile.tail
              << " period=" << u.profile.period << '\n';
      }
    else if (engine == "rpo")
      {
        if (!periodic)
          throw input_error("the rpo engine decides the strong periodic "
                            "properties only");
        RpoCheck r = check_rpodes_strong_periodic_d(des, spec, opts);
        v = r.periodic;
        extra << "strong (diagnostic): "
              << (r.strong.holds ? "holds" : "fails") << '\n';
      }

    std::cout << "property: " << a.property << '\n'
              << "engine: " << engine << '\n'
              << extra.str();
    print_verdict(des, v);
    return v.holds ? exit_holds : exit_fails;
  }

  // dumps ------------------------------------------------------------------

  struct DumpArgs
  {
    std::string file;
    bool dot = false;
    Budgets budgets;
  };

  int
  run_observer(const DumpArgs& a)
  {
    DesfDocument doc = read_desf_file(a.file);
    CheckOptions opts = resolve(a.budgets, true);
    Observer obs = expanded_observer(doc.des, opts.max_observer_states);
    if (a.dot)
      {
        std::cout << observer_dot(obs, doc.spec);
        return exit_holds;
      }
    LabeledDigraph g = obs.graph();
    std::cout << "states: " << obs.size() << '\n';
    for (NodeId s = 0; s < obs.size(); ++s)
      std::cout << "state " << s << ' '
                << format_estimate(doc.des, obs.estimate(s))
                << (is_violating(obs.estimate(s), doc.spec) ? " violating"
                                                            : "")
                << '\n';
    std::cout << "transitions: " << g.arc_count() << '\n';
    for (NodeId s = 0; s < g.size(); ++s)
      for (const Arc& arc : g.arcs(s))
        std::cout << "trans " << s << ' '
                  << doc.des.alphabet().name(arc.label) << ' ' << arc.target
                  << '\n';
    return exit_holds;
  }

  int
  run_detector(const DumpArgs& a)
  {
    DesfDocument doc = read_desf_file(a.file);
    Detector det(doc.des);
    if (a.dot)
      {
        std::cout << detector_dot(det, doc.spec);
        return exit_holds;
      }
    const LabeledDigraph& g = det.graph();
    std::cout << "states: " << det.size() << '\n';
    for (NodeId s = 0; s < det.size(); ++s)
      std::cout << "state " << s << ' '
                << format_estimate(doc.des, det.node(s)) << '\n';
    std::cout << "transitions: " << g.arc_count() << '\n';
    for (NodeId s = 0; s < g.size(); ++s)
      for (const Arc& arc : g.arcs(s))
        std::cout << "trans " << s << ' '
                  << doc.des.alphabet().name(arc.label) << ' ' << arc.target
                  << '\n';
    return exit_holds;
  }

  int
  run_project(const DumpArgs& a)
  {
    DesfDocument doc = read_desf_file(a.file);
    Des flat = project(doc.des);
    if (a.dot)
      std::cout << des_dot(flat, doc.spec);
    else
      std::cout << serialize_desf(flat, doc.spec);
    return exit_holds;
  }

  int
  run_classify(const std::string& file)
  {
    DesfDocument doc = read_desf_file(file);
    const Des& des = doc.des;
    AssumptionReport ar = validate_assumptions(des);
    std::cout << "states: " << des.state_count() << '\n'
              << "events: " << des.alphabet().size() << " ("
              << des.alphabet().observable_count() << " observable)\n"
              << "transitions: " << des.transitions().size() << '\n'
              << "spec pairs: " << doc.spec.size() << '\n';
    std::cout << "deadlock free: " << (ar.deadlock_free ? "yes" : "no");
    for (StateId q : ar.deadlocked)
      std::cout << ' ' << des.state_name(q);
    std::cout << "\nno unobservable loop: "
              << (ar.no_unobservable_loop ? "yes" : "no");
    for (StateId q : ar.unobservable_cycle)
      std::cout << ' ' << des.state_name(q);
    std::cout << "\nunary: " << (is_unary(des) ? "yes" : "no") << '\n';
    RpoReport r = classify_rpodes(des);
    std::cout << "rpoDES: " << (r.is_rpo ? "yes" : "no") << '\n';
    if (r.po_violation)
      {
        std::cout << "  cycle:";
        for (StateId q : *r.po_violation)
          std::cout << ' ' << des.state_name(q);
        std::cout << '\n';
      }
    if (r.selfloop_violation)
      std::cout << "  forbidden pattern: "
                << des.state_name(r.selfloop_violation->first) << " on "
                << des.alphabet().name(r.selfloop_violation->second) << '\n';
    return exit_holds;
  }

  // generate ---------------------------------------------------------------

  struct GenArgs
  {
    std::string output;
    // dag
    std::size_t vertices = 2;
    std::string edges;
    std::optional<std::uint32_t> source, target;
    // intersection
    std::vector<std::string> dfas;
    bool encode = false;
    // 3cnf
    std::string formula;
    // random
    std::uint64_t seed = 1;
    std::size_t states = 4;
    std::size_t events = 2;
    double observable_fraction = 0.7;
    double density = 0.3;
    double spec_probability = 0.2;
  };

  Dag
  parse_dag(const GenArgs& a)
  {
    Dag g;
    g.vertices = a.vertices;
    g.source = a.source.value_or(0);
    g.target = a.target.value_or(
      std::uint32_t(a.vertices ? a.vertices - 1 : 0));
    std::string text = a.edges;
    for (char& c : text)
      if (c == ',')
        c = ' ';
    std::istringstream in(text);
    std::string item;
    while (in >> item)
      {
        auto dash = item.find('-');
        try
          {
            if (dash == std::string::npos)
              throw std::invalid_argument(item);
            g.edges.emplace_back(std::stoul(item.substr(0, dash)),
                                 std::stoul(item.substr(dash + 1)));
          }
        catch (const std::exception&)
          {
            throw input_error("bad edge '" + item + "'; expected p-r");
          }
      }
    return g;
  }

  int
  emit(const GeneratedInstance& inst, const std::string& output)
  {
    std::string text = serialize_desf(inst.des, inst.spec, inst.provenance);
    if (output.empty() || output == "-")
      {
        std::cout << text;
        return exit_holds;
      }
    std::ofstream out(output, std::ios::binary);
    if (!out || !(out << text))
      throw input_error("cannot write '" + output + "'");
    return exit_holds;
  }

  int
  run_generate(const std::string& kind, const GenArgs& a)
  {
    if (kind == "dag")
      return emit(gen_from_dag(parse_dag(a)), a.output);
    if (kind == "intersection")
      {
        std::vector<Dfa> dfas;
        for (const auto& f : a.dfas)
          dfas.push_back(dfa_from_des(read_desf_file(f).des));
        return emit(gen_from_dfa_intersection(dfas, a.encode), a.output);
      }
    if (kind == "3cnf")
      return emit(gen_from_3cnf(parse_cnf(a.formula)), a.output);
    if (kind == "random" || kind == "rpo")
      {
        Des des = kind == "random"
                    ? gen_random_des({a.seed, a.states, a.events,
                                      a.observable_fraction, a.density})
                    : gen_random_rpodes(a.seed, a.states, a.events,
                                        a.density);
        Rng rng(a.seed ^ 0x9e3779b97f4a7c15ull);
        Spec spec = gen_random_spec(rng, des, a.spec_probability);
        std::string prov = kind + " system: seed " + std::to_string(a.seed);
        return emit({std::move(des), std::move(spec), std::move(prov)},
                    a.output);
      }
    throw input_error("unknown generator '" + kind + "'");
  }
}

int
main(int argc, char** argv)
{
  CLI::App app{"Verification of D-detectability for discrete event systems"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide a detectability property");
  check->add_option("file", check_args.file, "DESF input")->required();
  std::vector<std::string> names;
  for (const auto& [k, v] : property_names)
    names.push_back(k);
  check->add_option("-p,--property", check_args.property, "Property to decide")
    ->required()
    ->check(CLI::IsMember(names));
  check->add_option("-e,--engine", check_args.engine, "Decision procedure")
    ->check(CLI::IsMember({"auto", "general", "detector", "unary", "rpo"}));
  check->add_option("--replay", check_args.replay,
                    "Replay a witness 'stem=...; cycle=...' instead");
  check->add_flag("--force", check_args.force,
                  "Check even if the system deadlocks or has an "
                  "unobservable loop");
  add_budget_flags(check, check_args.budgets);

  DumpArgs obs_args, det_args, proj_args;
  auto* observer = app.add_subcommand("observer", "Print the observer");
  observer->add_option("file", obs_args.file, "DESF input")->required();
  observer->add_flag("--dot", obs_args.dot, "Graphviz output");
  add_budget_flags(observer, obs_args.budgets);
  auto* detector = app.add_subcommand("detector", "Print the detector");
  detector->add_option("file", det_args.file, "DESF input")->required();
  detector->add_flag("--dot", det_args.dot, "Graphviz output");
  auto* proj = app.add_subcommand("project",
                                  "Eliminate unobservable events");
  proj->add_option("file", proj_args.file, "DESF input")->required();
  proj->add_flag("--dot", proj_args.dot, "Graphviz output");

  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "Report structural facts");
  classify->add_option("file", classify_file, "DESF input")->required();

  GenArgs gen;
  std::string gen_kind;
  auto* generate = app.add_subcommand("generate", "Emit a generated instance");
  generate->add_option("kind", gen_kind, "dag, intersection, 3cnf, random, rpo")
    ->required()
    ->check(CLI::IsMember({"dag", "intersection", "3cnf", "random", "rpo"}));
  generate->add_option("-o,--output", gen.output, "Output file");
  generate->add_option("--vertices", gen.vertices, "DAG vertex count");
  generate->add_option("--edges", gen.edges, "DAG edges, e.g. \"0-1,1-2\"");
  generate->add_option("--source", gen.source, "DAG source (default 0)");
  generate->add_option("--target", gen.target,
                       "DAG target (default last vertex)");
  generate->add_option("--dfas", gen.dfas, "DFA files over events 0 and 1");
  generate->add_flag("--encode", gen.encode, "Binary-encode 0 and 1");
  generate->add_option("--formula", gen.formula, "Formula, e.g. \"(x|y)&(~x|y)\"");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--states", gen.states, "Random state count");
  generate->add_option("--events", gen.events, "Random event count");
  generate->add_option("--observable-fraction", gen.observable_fraction,
                       "Probability that an event is observable");
  generate->add_option("--density", gen.density, "Transition probability");
  generate->add_option("--spec-probability", gen.spec_probability,
                       "Probability of each spec pair");

  try
    {
      app.parse(argc, argv);
    }
  catch (const CLI::ParseError& e)
    {
      int code = app.exit(e);
      return code == 0 ? 0 : exit_input;
    }

  try
    {
      if (*check)
        return run_check(check_args);
      if (*observer)
        return run_observer(obs_args);
      if (*detector)
        return run_detector(det_args);
      if (*proj)
        return run_project(proj_args);
      if (*classify)
        return run_classify(classify_file);
      if (*generate)
        return run_generate(gen_kind, gen);
    }
  catch (const budget_exceeded& e)
    {
      std::cerr << "error: " << e.what() << '\n';
      return exit_budget;
    }
  catch (const parse_error& e)
    {
      std::cerr << "parse error: " << e.what() << '\n';
      return exit_input;
    }
  catch (const input_error& e)
    {
      std::cerr << "error: " << e.what() << '\n';
      return exit_input;
    }
  return exit_input;
}
