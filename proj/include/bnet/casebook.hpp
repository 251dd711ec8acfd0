#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "bnet/control.hpp"
#include "bnet/dynamics.hpp"
#include "bnet/format.hpp"
#include "bnet/interaction.hpp"
#include "bnet/parser.hpp"
#include "bnet/reduction.hpp"
#include "bnet/trapspaces.hpp"

namespace bnet {

// Embedded regression corpus: every worked example network together with its
// expected artifacts, frozen as literals. Each case replays the published
// claims through the public operations; any mismatch fails the suite.

struct case_check {
  std::string label;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct case_result {
  std::string id;
  std::string title;
  bool pass = true;
  std::vector<case_check> checks;
};

class case_recorder {
 public:
  void expect(const std::string& label, const std::string& expected, const std::string& actual) {
    checks.push_back({label, expected == actual, expected, actual});
  }
  void expect_true(const std::string& label, bool actual) {
    expect(label, "true", actual ? "true" : "false");
  }
  void expect_false(const std::string& label, bool actual) {
    expect(label, "false", actual ? "true" : "false");
  }
  std::vector<case_check> checks;
};

struct paper_case {
  std::string id;
  std::string title;
  std::string network;  // primary network source text
  std::function<void(case_recorder&)> run;
};

namespace casebook_detail {

inline std::string verdict_line(const control_record& r) {
  auto b = [](bool v) { return v ? "1" : "0"; };
  return std::string("SD=") + b(r.sync) + " AD=" + b(r.async) + " GD=" + b(r.general) +
         " MTS=" + b(r.mts) + " VP=" + b(r.vp);
}

inline std::string record_of(const boolean_network& net, const char* strategy,
                             const char* phenotype) {
  return verdict_line(
      control_report(net, parse_subspace(phenotype, net), parse_subspace(strategy, net)));
}

inline std::string strategies_of(const boolean_network& net, const char* phenotype,
                                 const char* criterion) {
  return format_subspaces(
      find_control_strategies(net, parse_subspace(phenotype, net), *parse_criterion(criterion)));
}

// Attractors of the controlled network projected onto the free components of
// the strategy, each attractor as a lexicographically sorted state list,
// attractors sorted by first state. This is the presentation used by the
// candidate-strategy tables.
inline std::string projected_row(const boolean_network& net, const char* strategy) {
  const subspace s = parse_subspace(strategy, net);
  std::vector<int> keep;
  for (int i = 0; i < s.arity; ++i)
    if (!s.is_fixed(i)) keep.push_back(i);
  std::vector<std::string> rendered;
  for (const attractor& a : attractors(apply_control(net, s), update_mode::asynchronous)) {
    std::vector<std::string> bits;
    for (std::uint32_t x : a.states)
      bits.push_back(to_string(project(state{x, a.arity}, keep)));
    std::sort(bits.begin(), bits.end());
    std::string one = "{";
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (i) one += ",";
      one += bits[i];
    }
    rendered.push_back(one + "}");
  }
  std::sort(rendered.begin(), rendered.end());
  std::string out;
  for (const std::string& r : rendered) {
    if (!out.empty()) out += ",";
    out += r;
  }
  return out;
}

inline std::string edges_of(const signed_interaction_graph& g) {
  std::string out;
  for (int i = 0; i < g.arity; ++i)
    for (int j = 0; j < g.arity; ++j) {
      if (!g.has_edge(i, j)) continue;
      if (!out.empty()) out += " ";
      out += std::to_string(i + 1) + "->" + std::to_string(j + 1) + ":";
      if (g.has_positive(i, j)) out += "+";
      if (g.has_negative(i, j)) out += "-";
    }
  return out;
}

}  // namespace casebook_detail

inline const std::vector<paper_case>& paper_suite() {
  using namespace casebook_detail;
  static const std::vector<paper_case> cases = [] {
    std::vector<paper_case> cs;

    const std::string fig_ex_all = "x1, x1 & !x2 | x1 & x3\nx2, x1 & !x3\nx3, x2\n";

    cs.push_back({"fig:ex-all",
                  "3-component network, its update schemes, trap spaces and reduction",
                  fig_ex_all, [fig_ex_all](case_recorder& r) {
      auto f = parse_network(fig_ex_all);
      r.expect("f(110)", "011", to_string(f.evaluate(state_from_string("110"))));
      r.expect("f(100)", "110", to_string(f.evaluate(state_from_string("100"))));
      r.expect("successors sync 110", "011",
               format_states(successors(f, state_from_string("110"), update_mode::synchronous)));
      r.expect("successors async 110", "010,111",
               format_states(successors(f, state_from_string("110"), update_mode::asynchronous)));
      r.expect("successors general 110", "010,011,111",
               format_states(successors(f, state_from_string("110"), update_mode::general)));
      r.expect("successors of fixed point 000", "",
               format_states(successors(f, state_from_string("000"), update_mode::general)));
      auto g = interaction_graph(f);
      r.expect("interaction graph", "1->1:+ 1->2:+ 2->1:- 2->3:+ 3->1:+ 3->2:-", edges_of(g));
      r.expect_true("component 1 autoregulated", is_autoregulated(g, 0));
      r.expect_false("component 3 autoregulated", is_autoregulated(g, 2));
      r.expect("trap spaces", "*** 0** 00* 000", format_subspaces(trap_spaces(f)));
      r.expect("minimal trap spaces", "000", format_subspaces(minimal_trap_spaces(f)));
      for (auto m : {update_mode::synchronous, update_mode::asynchronous, update_mode::general})
        r.expect(std::string("attractors ") + to_string(m), "{000}",
                 format_attractors(attractors(f, m)));
      r.expect("propagation fixpoint", "***", to_string(percolation_fixpoint(f)));
      r.expect("representative of 11", "111",
               to_string(representative(f, 2, state_from_string("11"))));
      r.expect("representative of 00", "000",
               to_string(representative(f, 2, state_from_string("00"))));
      auto fr = eliminate(f, 2);
      r.expect("reduction", "x1, x1\nx2, x1 & !x2\n", serialize_network(fr));
      for (auto m : {update_mode::synchronous, update_mode::asynchronous, update_mode::general})
        r.expect(std::string("reduced attractors ") + to_string(m), "{00} {10,11}",
                 format_attractors(attractors(fr, m)));
      r.expect("reduced minimal trap spaces", "00 1*",
               format_subspaces(minimal_trap_spaces(fr)));
      r.expect_false("reduction preserves minimal trap spaces", strictly_preserves_mts(f, 2));
    }});

    cs.push_back({"fig:order",
                  "control application and elimination only commute when the "
                  "eliminated component is free in the strategy",
                  "x1, x1 | x2\nx2, x1\n", [](case_recorder& r) {
      auto f = parse_network("x1, x1 | x2\nx2, x1\n");
      auto controlled = apply_control(f, parse_subspace("*1", f));
      r.expect("C(f,*1)", "x1, x1 | x2\nx2, 1\n", serialize_network(controlled));
      r.expect("eliminate then control differ: reduce(C(f,S))", "x1, 1\n",
               serialize_network(eliminate(controlled, 1)));
      r.expect("eliminate then control differ: reduce(f)", "x1, x1\n",
               serialize_network(eliminate(f, 1)));
    }});

    cs.push_back({"ex:attrs-no-mts:async",
                  "attractor control without trap-space control (asynchronous)",
                  "x1, x2 & !x3\nx2, x3 & !x2\nx3, x2 | !x3\n", [](case_recorder& r) {
      auto f = parse_network("x1, x2 & !x3\nx2, x3 & !x2\nx3, x2 | !x3\n");
      r.expect("async attractors", "{000,001,011}",
               format_attractors(attractors(f, update_mode::asynchronous)));
      r.expect("trap spaces", "***", format_subspaces(trap_spaces(f)));
      r.expect("verdicts S=*** P=0**", "SD=0 AD=1 GD=0 MTS=0 VP=0", record_of(f, "***", "0**"));
    }});

    cs.push_back({"ex:attrs-no-mts:sync",
                  "attractor control without trap-space control (synchronous)",
                  "x1, x2 & x3\nx2, x3\nx3, !x3\n", [](case_recorder& r) {
      auto f = parse_network("x1, x2 & x3\nx2, x3\nx3, !x3\n");
      r.expect("sync attractors", "{010,001}",
               format_attractors(attractors(f, update_mode::synchronous)));
      r.expect("verdicts S=*** P=0**", "SD=1 AD=0 GD=0 MTS=0 VP=0", record_of(f, "***", "0**"));
    }});

    cs.push_back({"ex:attrs-no-mts:general",
                  "attractor control without trap-space control (general asynchronous)",
                  "x1, x2 & x3 & x4\nx2, x4 & (x2 | !x1 & !x3)\n"
                  "x3, !x1 & (x2 & x3 | !x2 & !x4)\nx4, x3 & !x1\n", [](case_recorder& r) {
      auto f = parse_network(
          "x1, x2 & x3 & x4\nx2, x4 & (x2 | !x1 & !x3)\n"
          "x3, !x1 & (x2 & x3 | !x2 & !x4)\nx4, x3 & !x1\n");
      auto rec = control_report(f, parse_subspace("0***", f), parse_subspace("****", f));
      r.expect_true("general attractor control S=**** P=0***", rec.general);
      r.expect_false("trap-space control", rec.mts);
      r.expect_false("propagation control", rec.vp);
    }});

    cs.push_back({"ex:mts-no-attrs",
                  "trap-space control without attractor control in any scheme",
                  "x1, (x1 | x2) & !x3\nx2, !x1 & (x2 | x3)\nx3, !x2 & (x1 | x3)\n",
                  [](case_recorder& r) {
      auto f = parse_network("x1, (x1 | x2) & !x3\nx2, !x1 & (x2 | x3)\nx3, !x2 & (x1 | x3)\n");
      r.expect("minimal trap spaces", "000", format_subspaces(minimal_trap_spaces(f)));
      r.expect("fixed points", "000", format_states(fixed_points(f)));
      for (auto m : {update_mode::synchronous, update_mode::asynchronous, update_mode::general})
        r.expect(std::string("attractors ") + to_string(m), "{000} {100,010,110,001,101,011}",
                 format_attractors(attractors(f, m)));
      r.expect("verdicts S=*** P=0**", "SD=0 AD=0 GD=0 MTS=1 VP=0", record_of(f, "***", "0**"));
    }});

    cs.push_back({"ex:attrs-prop",
                  "attractor and trap-space control without propagation control",
                  fig_ex_all, [fig_ex_all](case_recorder& r) {
      auto f = parse_network(fig_ex_all);
      r.expect("verdicts S=*** P=0**", "SD=1 AD=1 GD=1 MTS=1 VP=0", record_of(f, "***", "0**"));
    }});

    cs.push_back({"ex:synch",
                  "synchronous cycles break the projected-attractor correspondence",
                  "x1, x2\nx2, x1\n", [](case_recorder& r) {
      auto f = parse_network("x1, x2\nx2, x1\n");
      r.expect("sync attractors", "{00} {10,01} {11}",
               format_attractors(attractors(f, update_mode::synchronous)));
      auto fr = eliminate(f, 1);
      r.expect("reduction", "x1, x1\n", serialize_network(fr));
      r.expect("reduced sync attractors", "{0} {1}",
               format_attractors(attractors(fr, update_mode::synchronous)));
      // The projected cycle {0,1} spans the full reduced space, so its
      // cylinder is the whole space and holds all three attractors.
      auto as = attractors(f, update_mode::synchronous);
      subspace cyl = subspace::full(2);
      int inside = 0;
      for (const auto& a : as) {
        bool all_in = true;
        for (auto x : a.states)
          if (!cyl.contains(x)) all_in = false;
        if (all_in) ++inside;
      }
      r.expect("attractors in the cylinder of the projected cycle", "3", std::to_string(inside));
    }});

    cs.push_back({"lemma:trap-sets:sync",
                  "a synchronous trap set whose projection is not a trap set",
                  "x1, x1 & !x3\nx2, 0\nx3, 0\n", [](case_recorder& r) {
      auto f = parse_network("x1, x1 & !x3\nx2, 0\nx3, 0\n");
      auto fr = eliminate(f, 2);
      r.expect("reduction", "x1, x1\nx2, 0\n", serialize_network(fr));
      std::vector<state> a = {state_from_string("000"), state_from_string("111")};
      r.expect_true("A={000,111} trap set for SD(f)",
                    is_trap_set(f, a, update_mode::synchronous));
      std::vector<state> ap = {state_from_string("00"), state_from_string("11")};
      r.expect_false("projection {00,11} trap set for SD(reduction)",
                     is_trap_set(fr, ap, update_mode::synchronous));
    }});

    cs.push_back({"ex:lemma-propagation-needs-trap-seed",
                  "propagation containment may fail from a non-trap-space seed",
                  "x1, x1 & x2\nx2, x1\n", [](case_recorder& r) {
      auto f = parse_network("x1, x1 & x2\nx2, x1\n");
      r.expect_false("*0 is a trap space", is_trap_space(f, parse_subspace("*0", f)));
      r.expect("one propagation step from *0", "0*",
               to_string(percolate(f, parse_subspace("*0", f))));
      auto fr = eliminate(f, 1);
      r.expect("reduction", "x1, x1\n", serialize_network(fr));
      r.expect("one reduced propagation step from *", "*",
               to_string(percolate(fr, parse_subspace("*", fr))));
    }});

    cs.push_back({"ex:fixed-in-P-1",
                  "control strategies can vanish in the reduction (component fixed in the phenotype)",
                  fig_ex_all, [fig_ex_all](case_recorder& r) {
      auto f = parse_network(fig_ex_all);
      r.expect("verdicts S=*** P=0*0", "SD=1 AD=1 GD=1 MTS=1 VP=0", record_of(f, "***", "0*0"));
      auto fr = eliminate(f, 2);
      for (const char* c : {"attractor:sync", "attractor:async", "attractor:general", "mts"})
        r.expect(std::string("reduced strategies ") + c + " P=0*", "(none)",
                 strategies_of(fr, "0*", c));
    }});

    const std::string mediator4 =
        "x1, x3 | x1 & x2 | !x1 & !x2\nx2, x4 | x2 & !x1\nx3, x3 & !x1 | !x1 & !x2\nx4, x3\n";

    cs.push_back({"ex:fixed-in-P-1-mediator",
                  "attractor-control strategies can vanish even when a linear mediator is removed",
                  mediator4, [mediator4](case_recorder& r) {
      auto f = parse_network(mediator4);
      auto g = interaction_graph(f);
      r.expect_true("component 4 is a mediator", is_mediator(g, 3));
      r.expect_true("component 4 is linear", is_linear(g, 3));
      for (auto m : {update_mode::synchronous, update_mode::asynchronous, update_mode::general})
        r.expect(std::string("attractors ") + to_string(m), "{0100}",
                 format_attractors(attractors(f, m)));
      auto fr = eliminate(f, 3);
      auto expected = parse_network(
          "x1, x3 | x1 & x2 | !x1 & !x2\nx2, x3 | x2 & !x1\nx3, x3 & !x1 | !x1 & !x2\n");
      r.expect_true("reduction matches", semantically_equal(fr, expected));
      for (auto m : {update_mode::synchronous, update_mode::asynchronous, update_mode::general})
        r.expect(std::string("reduced attractor count ") + to_string(m), "2",
                 std::to_string(attractors(fr, m).size()));
      r.expect("verdicts S=**** P=0**0", "SD=1 AD=1 GD=1 MTS=1 VP=0",
               record_of(f, "****", "0**0"));
      for (const char* c : {"attractor:sync", "attractor:async", "attractor:general"})
        r.expect(std::string("reduced strategies ") + c + " P=0**", "(none)",
                 strategies_of(fr, "0**", c));
      r.expect("reduced strategies mts P=0**", "***", strategies_of(fr, "0**", "mts"));
    }});

    cs.push_back({"ex:fixed-in-P-2",
                  "control strategies can appear in the reduction (component fixed in the phenotype)",
                  fig_ex_all, [fig_ex_all](case_recorder& r) {
      auto f = parse_network(fig_ex_all);
      for (const char* c : {"attractor:sync", "attractor:async", "attractor:general", "mts", "vp"})
        r.expect(std::string("strategies ") + c + " P=*01", "(none)", strategies_of(f, "*01", c));
      auto fr = eliminate(f, 2);
      for (const char* c : {"attractor:sync", "attractor:async", "attractor:general", "mts", "vp"})
        r.expect(std::string("reduced strategies ") + c + " P=*0", "0*",
                 strategies_of(fr, "*0", c));
      // minimal two-component variant
      auto z = parse_network("x1, 0\nx2, 0\n");
      for (const char* c : {"attractor:sync", "attractor:async", "attractor:general", "mts", "vp"})
        r.expect(std::string("constant net strategies ") + c + " P=*1", "(none)",
                 strategies_of(z, "*1", c));
      auto zr = eliminate(z, 1);
      r.expect("constant net reduction", "x1, 0\n", serialize_network(zr));
      r.expect("reduced full space is a strategy", "SD=1 AD=1 GD=1 MTS=1 VP=1",
               record_of(zr, "*", "*"));
    }});

    cs.push_back({"ex:fixed-in-P-2-mediator",
                  "control strategies can appear in the reduction of a linear mediator",
                  "x1, x2 & x3\nx2, 0\nx3, x1\n", [](case_recorder& r) {
      auto f = parse_network("x1, x2 & x3\nx2, 0\nx3, x1\n");
      auto g = interaction_graph(f);
      r.expect_true("component 3 is a mediator", is_mediator(g, 2));
      r.expect_true("component 3 is linear", is_linear(g, 2));
      for (const char* c : {"attractor:sync", "attractor:async", "attractor:general", "mts", "vp"})
        r.expect(std::string("strategies ") + c + " P=0*1", "(none)", strategies_of(f, "0*1", c));
      auto fr = eliminate(f, 2);
      r.expect_true("reduction matches",
                    semantically_equal(fr, parse_network("x1, x1 & x2\nx2, 0\n")));
      r.expect("reduced verdicts S=** P=0*", "SD=1 AD=1 GD=1 MTS=1 VP=1",
               record_of(fr, "**", "0*"));
      r.expect_true("mediator elimination preserves minimal trap spaces",
                    strictly_preserves_mts(f, 2));
    }});

    cs.push_back({"ex:free-in-P-CS-to-no-CS",
                  "strategies can vanish in the reduction (component free in the phenotype)",
                  fig_ex_all, [fig_ex_all](case_recorder& r) {
      auto f = parse_network(fig_ex_all);
      r.expect("verdicts S=*** P=0**", "SD=1 AD=1 GD=1 MTS=1 VP=0", record_of(f, "***", "0**"));
      auto fr = eliminate(f, 2);
      for (const char* c : {"attractor:sync", "attractor:async", "attractor:general", "mts", "vp"})
        r.expect(std::string("reduced strategies ") + c + " P=0*", "(none)",
                 strategies_of(fr, "0*", c));
    }});

    cs.push_back({"ex:free-in-P-CS-to-no-CS-mediator",
                  "attractor strategies can vanish when a mediator is removed "
                  "(component free in the phenotype)",
                  mediator4, [mediator4](case_recorder& r) {
      auto f = parse_network(mediator4);
      r.expect("verdicts S=**** P=0***", "SD=1 AD=1 GD=1 MTS=1 VP=0",
               record_of(f, "****", "0***"));
      auto fr = eliminate(f, 3);
      r.expect("reduced verdicts S=*** P=0**", "SD=0 AD=0 GD=0 MTS=1 VP=0",
               record_of(fr, "***", "0**"));
      for (const char* c : {"attractor:sync", "attractor:async", "attractor:general"})
        r.expect(std::string("reduced strategies ") + c + " P=0**", "(none)",
                 strategies_of(fr, "0**", c));
    }});

    cs.push_back({"ex:prop",
                  "propagation strategies can appear in the reduction while the "
                  "source network has none",
                  "x1, x1 & !x2 | x1 & !x3 | x2 & x3 & !x1\nx2, x1 & !x3\nx3, x1\n",
                  [](case_recorder& r) {
      auto f = parse_network("x1, x1 & !x2 | x1 & !x3 | x2 & x3 & !x1\nx2, x1 & !x3\nx3, x1\n");
      auto fr = eliminate(f, 2);
      r.expect("reduction", "x1, x1 & !x2\nx2, 0\n", serialize_network(fr));
      r.expect("strategies vp P=0**", "(none)", strategies_of(f, "0**", "vp"));
      r.expect("strategies attractor:sync P=0**", "(none)",
               strategies_of(f, "0**", "attractor:sync"));
      r.expect("strategies mts P=0**", "*1*", strategies_of(f, "0**", "mts"));
      r.expect("strategies attractor:async P=0**", "*1*",
               strategies_of(f, "0**", "attractor:async"));
      r.expect("strategies attractor:general P=0**", "*1*",
               strategies_of(f, "0**", "attractor:general"));
      r.expect("verdicts S=*1* P=0**", "SD=0 AD=1 GD=1 MTS=1 VP=0", record_of(f, "*1*", "0**"));
      r.expect("reduced verdicts S=*1 P=0*", "SD=1 AD=1 GD=1 MTS=1 VP=1",
               record_of(fr, "*1", "0*"));
      r.expect("reduced propagation fixpoint of C(f~,*1)", "01",
               to_string(percolation_fixpoint(apply_control(fr, parse_subspace("*1", fr)))));
    }});

    cs.push_back({"ex:free-in-P-no-CS-to-CS",
                  "a propagation strategy of the reduction with no propagation "
                  "counterpart among the listed subspaces",
                  "x1, !x1 & !x2 | !x1 & !x3 | x2 & !x3\n"
                  "x2, x1 & !x2 & !x3 | !x1 & !x2 & x3\nx3, x1 & !x2 | !x1 & x2\n",
                  [](case_recorder& r) {
      auto f = parse_network(
          "x1, !x1 & !x2 | !x1 & !x3 | x2 & !x3\n"
          "x2, x1 & !x2 & !x3 | !x1 & !x2 & x3\nx3, x1 & !x2 | !x1 & x2\n");
      auto fr = eliminate(f, 2);
      r.expect_true("reduction matches",
                    semantically_equal(fr, parse_network("x1, x1 & x2 | !x1 & !x2\nx2, 0\n")));
      r.expect("reduced verdicts S=** P=*0", "SD=1 AD=1 GD=1 MTS=1 VP=1",
               record_of(fr, "**", "*0"));
      r.expect("verdicts S=*** P=*0*", "SD=0 AD=0 GD=0 MTS=0 VP=0", record_of(f, "***", "*0*"));
      r.expect("verdicts S=**0 P=*0*", "SD=0 AD=0 GD=0 MTS=0 VP=0", record_of(f, "**0", "*0*"));
      r.expect("verdicts S=**1 P=*0*", "SD=0 AD=0 GD=0 MTS=0 VP=0", record_of(f, "**1", "*0*"));
      r.expect("verdicts S=0** P=*0*", "SD=0 AD=1 GD=1 MTS=1 VP=0", record_of(f, "0**", "*0*"));
      r.expect("verdicts S=1** P=*0*", "SD=0 AD=1 GD=1 MTS=1 VP=0", record_of(f, "1**", "*0*"));
    }});

    cs.push_back({"ex:no-CS-to-CS-not-fixed",
                  "trap-space and attractor strategies appear in the reduction while "
                  "the source admits none; per-subspace attractor table",
                  "x1, x2 & !x3 | x2 & !x4 | x3 & x4 & !x2\nx2, x1 & !x3 | x1 & !x4\n"
                  "x3, x1 & !x4 | x4 & !x1\nx4, x2 & x3 | x1 & !x2 | !x2 & !x3\n",
                  [](case_recorder& r) {
      auto f = parse_network(
          "x1, x2 & !x3 | x2 & !x4 | x3 & x4 & !x2\nx2, x1 & !x3 | x1 & !x4\n"
          "x3, x1 & !x4 | x4 & !x1\nx4, x2 & x3 | x1 & !x2 | !x2 & !x3\n");
      auto fr = eliminate(f, 3);
      auto expected = parse_network(
          "x1, x2 & !x3 | x1 & x3 & !x2\nx2, x1 & !x3\n"
          "x3, x1 & x2 & !x3 | x2 & x3 & !x1 | !x1 & !x2 & !x3\n");
      r.expect_true("reduction matches", semantically_equal(fr, expected));
      r.expect("minimal trap spaces", "****", format_subspaces(minimal_trap_spaces(f)));
      r.expect("reduced minimal trap spaces", "00*", format_subspaces(minimal_trap_spaces(fr)));
      r.expect("reduced async attractors", "{000,001}",
               format_attractors(attractors(fr, update_mode::asynchronous)));
      auto rr = control_report(fr, parse_subspace("00*", fr), parse_subspace("***", fr));
      r.expect_true("reduced full space: async attractor control", rr.async);
      r.expect_true("reduced full space: general attractor control", rr.general);
      r.expect_true("reduced full space: trap-space control", rr.mts);
      r.expect_false("reduced full space: propagation control", rr.vp);
      using row = std::pair<const char*, const char*>;
      for (auto [s, want] : {
               row{"****", "{0000,0001,0010,0011,0111,1001,1011,1100,1101,1110,1111}"},
               row{"***0", "{000},{111}"},
               row{"***1", "{110}"},
               row{"**0*", "{001},{110}"},
               row{"**00", "{00},{11}"},
               row{"**01", "{00},{11}"},
               row{"**1*", "{000},{101}"},
               row{"**10", "{00},{11}"},
               row{"**11", "{10}"},
           })
        r.expect(std::string("async attractors under ") + s, want, projected_row(f, s));
      for (const char* c : {"attractor:async", "attractor:general", "mts"})
        r.expect(std::string("strategies ") + c + " P=00**", "(none)",
                 strategies_of(f, "00**", c));
    }});

    cs.push_back({"ex:new-cs-mediator:async",
                  "attractor strategies appear after removing a linear mediator (asynchronous)",
                  "x1, x1 & x2 | x1 & !x3 | x3 & !x1 & !x2\nx2, !x2 & !x3 | x2 & x3 & !x1\n"
                  "x3, !x3 & !x4\nx4, !x2\n", [](case_recorder& r) {
      auto f = parse_network(
          "x1, x1 & x2 | x1 & !x3 | x3 & !x1 & !x2\nx2, !x2 & !x3 | x2 & x3 & !x1\n"
          "x3, !x3 & !x4\nx4, !x2\n");
      auto g = interaction_graph(f);
      r.expect_true("component 4 is a mediator", is_mediator(g, 3));
      r.expect_true("component 4 is linear", is_linear(g, 3));
      r.expect("strategies attractor:async P=0***", "(none)",
               strategies_of(f, "0***", "attractor:async"));
      r.expect("reduced strategies attractor:async P=0**", "***",
               strategies_of(eliminate(f, 3), "0**", "attractor:async"));
    }});

    cs.push_back({"ex:new-cs-mediator:general",
                  "attractor strategies appear after removing a linear mediator "
                  "(general asynchronous)",
                  "x1, x1 & x3 | x1 & !x4 | x4 & !x1 & !x3\nx2, !x2\nx3, x2 | !x5\n"
                  "x4, x1 & x2 & x3 | x1 & x3 & !x4 | x2 & x3 & !x4\nx5, !x4\n",
                  [](case_recorder& r) {
      auto f = parse_network(
          "x1, x1 & x3 | x1 & !x4 | x4 & !x1 & !x3\nx2, !x2\nx3, x2 | !x5\n"
          "x4, x1 & x2 & x3 | x1 & x3 & !x4 | x2 & x3 & !x4\nx5, !x4\n");
      auto g = interaction_graph(f);
      r.expect_true("component 5 is a mediator", is_mediator(g, 4));
      r.expect_true("component 5 is linear", is_linear(g, 4));
      r.expect("strategies attractor:general P=0****", "(none)",
               strategies_of(f, "0****", "attractor:general"));
      r.expect("reduced strategies attractor:general P=0***", "****",
               strategies_of(eliminate(f, 4), "0***", "attractor:general"));
    }});

    cs.push_back({"ex:new-cs-mediator:sync",
                  "attractor strategies appear after removing a linear mediator (synchronous)",
                  "x1, x1 & !x2 | x2 & !x1\nx2, !x2 & !x3\nx3, !x1\n", [](case_recorder& r) {
      auto f = parse_network("x1, x1 & !x2 | x2 & !x1\nx2, !x2 & !x3\nx3, !x1\n");
      auto g = interaction_graph(f);
      r.expect_true("component 3 is a mediator", is_mediator(g, 2));
      r.expect_true("component 3 is linear", is_linear(g, 2));
      r.expect("strategies attractor:sync P=0**", "(none)",
               strategies_of(f, "0**", "attractor:sync"));
      r.expect("reduced strategies attractor:sync P=0*", "**",
               strategies_of(eliminate(f, 2), "0*", "attractor:sync"));
    }});

    cs.push_back({"ex:mediator-linear",
                  "a linear mediator whose elimination strictly preserves minimal trap spaces",
                  "x1, x2 & x3\nx2, 0\nx3, x1\n", [](case_recorder& r) {
      auto f = parse_network("x1, x2 & x3\nx2, 0\nx3, x1\n");
      auto g = interaction_graph(f);
      r.expect_true("component 3 is a mediator", is_mediator(g, 2));
      r.expect_true("component 3 is linear", is_linear(g, 2));
      r.expect_true("strict preservation", strictly_preserves_mts(f, 2));
      auto report = mts_preservation(f, 2);
      r.expect("pair count", "1", std::to_string(report.pairs.size()));
    }});

    return cs;
  }();
  return cases;
}

inline case_result run_case(const paper_case& c) {
  case_recorder recorder;
  case_result result;
  result.id = c.id;
  result.title = c.title;
  try {
    c.run(recorder);
  } catch (const std::exception& e) {
    recorder.checks.push_back({"exception", false, "(no exception)", e.what()});
  }
  result.checks = std::move(recorder.checks);
  for (const case_check& chk : result.checks)
    if (!chk.pass) result.pass = false;
  return result;
}

inline std::vector<case_result> run_paper_suite() {
  std::vector<case_result> out;
  for (const paper_case& c : paper_suite()) out.push_back(run_case(c));
  return out;
}

}  // namespace bnet
