#include "postlat/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "postlat/catalog.hpp"
#include "postlat/closure.hpp"
#include "postlat/constraints.hpp"
#include "postlat/error.hpp"
#include "postlat/formula.hpp"
#include "postlat/interval.hpp"

namespace postlat {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

TruthTable expr(std::string_view text) { return to_table(parse_expr(text)); }

Outcome unary() {
  Outcome o;
  const std::set<std::set<std::string>> expected = {
      {}, {"0"}, {"1"}, {"0", "1"}, {"id"}, {"0", "id"}, {"1", "id"}, {"0", "1", "id"}, {"id", "¬"}, {"0", "1", "id", "¬"}};
  std::set<std::set<std::string>> got;
  for (const auto& c : unary_idempotent_enumeration()) got.insert({c.content.begin(), c.content.end()});
  o.check(got.size() == 10, "found " + std::to_string(got.size()) + " classes");
  o.check(got == expected, "class contents differ from the expected list");
  return o;
}

Outcome lgen() {
  Outcome o;
  const ClosureResult plus = idempotent_closure({expr("x1 + x2")}, 4);
  o.check(plus.cls == fragment("L_00", 4), "⌊+⌋ differs from L_00 " + plus.cls.summary());
  const ClosureResult nplus = idempotent_closure({expr("!(x1 + x2)")}, 4);
  o.check(nplus.cls == fragment("L_11", 4), "⌊¬+⌋ differs from L_11 " + nplus.cls.summary());
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("sizes ") + plus.cls.summary() + " " + nplus.cls.summary();
  return o;
}

Outcome implication() {
  Outcome o;
  const ClosureResult r = idempotent_closure({expr("x1 -> x2")}, 4);
  const FunctionClass b = fragment("B^∞", 4);
  o.check(r.cls == b, "⌊→⌋ " + r.cls.summary() + " differs from B^∞ " + b.summary());
  o.check(r.cls.contains(expr("x1 -> (x2 -> x3)")), "x1→(x2→x3) missing");
  o.check(!r.cls.contains(expr("(x1 -> x2) -> x3")), "(x1→x2)→x3 present");
  if (o.ok) o.detail = "sizes " + r.cls.summary() + (r.exact ? " exact" : " approximate");
  return o;
}

Outcome hat() {
  Outcome o;
  const std::pair<HatOperation, const char*> cases[] = {{HatOperation::Implication, "Ω_="}, {HatOperation::Sum, "R"}};
  for (const auto& [op, name] : cases) {
    const FunctionClass target = fragment(name, 3);
    std::size_t built = 0;
    for (int k = 1; k <= 3; ++k) {
      const std::uint64_t count = std::uint64_t{1} << bits::points(k);
      std::vector<Table> reached;
      for (std::uint64_t t = 0; t < count; ++t) {
        const TruthTable h = TruthTable::from_word(k, t);
        const auto w = outer_witness(h, op);
        if (!w) continue;
        if (w->outer.arity() != k * k || !(compose(w->outer, w->inner) == h)) {
          o.check(false, "witness for " + h.to_string() + " does not compose back");
          continue;
        }
        reached.push_back(t);
      }
      built += reached.size();
      o.check(reached == target.level(k), std::string(name) + " differs at arity " + std::to_string(k));
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::string(name) + ": " + std::to_string(built) + " functions";
  }
  return o;
}

Outcome gadgets() {
  Outcome o;
  std::string grid;
  for (int m : {3, 5}) {
    for (int n : {3, 4, 5}) {
      const bool claim = gadget_claim(m, n);
      o.check(claim == (m != n), "claim(" + std::to_string(m) + "," + std::to_string(n) + ") = " + (claim ? "true" : "false"));
      grid += claim ? '1' : '0';
    }
  }
  const GadgetResult r = gadget_evaluate(3, 3);
  const Relation q = Relation::nonzero(3);
  const bool enumerated = !find_violation(build_f(3), q, q).has_value();
  o.check(enumerated == r.preserves_q, "preservation disagrees with Q-matrix enumeration at (3,3)");
  if (o.ok) o.detail = "grid m=3,5 × n=3,4,5: " + grid;
  return o;
}

Outcome wchain() {
  Outcome o;
  const FunctionClass w = fragment("W^3", 5), we = fragment("W^3_=", 5), bw = fragment("B^2∩W^3", 5),
                      b = fragment("B^3", 5);
  o.check(we.subset_of(w) && !(we == w), "W^3_= is not strictly inside W^3");
  o.check(bw.subset_of(we) && !(bw == we), "B^2∩W^3 is not strictly inside W^3_=");
  o.check(b.subset_of(bw) && !(b == bw), "B^3 is not strictly inside B^2∩W^3");
  const TruthTable id = TruthTable::projection(1, 1);
  o.check(w.contains(id) && !we.contains(id), "id does not separate W^3 from W^3_=");
  const TruthTable z = TruthTable::from_points(3, [](std::uint32_t p) { return p != 1 && p != 2; });
  o.check(we.contains(z) && !bw.contains(z), "zeros {100,010} do not separate W^3_= from B^2∩W^3");
  const TruthTable v2 = v_j(2);
  o.check(bw.contains(v2) && !b.contains(v2), "v_2 does not separate B^2∩W^3 from B^3");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("sizes ") + w.summary() + " ⊃ " + we.summary() + " ⊃ " +
              bw.summary() + " ⊃ " + b.summary();
  return o;
}

Outcome zlaws() {
  Outcome o;
  for (const char* name : {"B^2", "W^2", "Ω_11", "R", "L_00"}) {
    const FunctionClass k = fragment(name, 4);
    const FunctionClass z2 = z_operator(k, 2), z3 = z_operator(k, 3), zi = z_operator(k, kInfinity);
    o.check(z3.subset_of(z2) && zi.subset_of(z3), std::string("chain fails for ") + name);
  }
  for (int k : {2, 3}) {
    const FunctionClass b = fragment("B^" + std::to_string(k), 4);
    o.check(z_operator(b, k) == b, "Z_" + std::to_string(k) + "(B^" + std::to_string(k) + ") differs");
  }
  return o;
}

Relation rel(int arity, std::initializer_list<const char*> rows) {
  std::vector<BitTuple> ts;
  for (const char* r : rows) {
    BitTuple t;
    for (const char* c = r; *c; ++c) t.push_back(*c == '1');
    ts.push_back(t);
  }
  return Relation::from_bit_tuples(arity, ts);
}

Outcome galois() {
  Outcome o;
  const std::pair<const char*, Constraint> cases[] = {
      {"Ω_=", Constraint(rel(2, {"01"}), rel(2, {"00", "11"}))},
      {"Ω_00", Constraint(rel(2, {"01"}), rel(2, {"00"}))},
      {"Ω_11", Constraint(rel(2, {"01"}), rel(2, {"11"}))},
      {"R", Constraint(rel(2, {"01", "10"}), rel(2, {"00", "11"}))},
      {"B^2", Constraint(Relation::nonone(2), Relation::nonzero(2))},
      {"D^2", Constraint(Relation::nonzero(2), Relation::nonone(2))},
  };
  for (const auto& [name, c] : cases) {
    const FunctionClass k = FunctionClass::from_filter(3, [&](Table t, int a) {
      return strongly_satisfies(TruthTable::from_word(a, t), c);
    });
    const bool equivalence = k == FunctionClass::from_functions(3, k.canonical_members());
    o.check(equivalence && is_minor_closed(k), std::string(name) + " fragment is not minor-closed");
    o.check(is_composition_closed(k), std::string(name) + " fragment is not composition-closed");
    o.detail += (o.detail.empty() ? "" : " ") + std::string(name) + k.summary();
  }
  return o;
}

Outcome ck() {
  Outcome o;
  for (const char* name : {"R", "Ω_=", "B^2"}) {
    const FunctionClass k = fragment(name, 3);
    const std::vector<TruthTable> gens = k.canonical_members();
    const FunctionClass c = clone_closure(gens, 3);
    o.check(compose_classes(c, k) == k, std::string("C∘K ≠ K for ") + name);
    o.check(compose_classes(k, c) == c, std::string("K∘C ≠ C for ") + name);
    const ClosureResult idem = idempotent_closure(gens, 3);
    const FunctionClass cross = compose_classes(c, equational_closure(gens, 3));
    o.check(idem.cls == cross && idem.exact, std::string("the two computations of ⌊K⌋ differ for ") + name);
  }
  return o;
}

Outcome intervals() {
  Outcome o;
  const std::pair<const char*, std::vector<std::string>> cases[] = {
      {"Ω", {"Ω", "Ω_=", "R"}}, {"Ω_*1", {"Ω_*1", "Ω_11", "R_11"}}, {"L", {"L", "L_="}}, {"L_0*", {"L_0*", "L_00"}}};
  for (const auto& [clone, names] : cases) {
    const int n = clone[0] == 'L' ? 4 : 3;
    const IntervalDiagram d = interval_explore(clone, n);
    o.check(d.nodes.size() == names.size(), std::string("wrong size for I(") + clone + ")");
    for (std::size_t i = 0; i < d.nodes.size() && i < names.size(); ++i) {
      o.check(d.nodes[i].label == names[i] && d.nodes[i].cls == fragment(names[i], n),
              std::string("node ") + names[i] + " differs");
      o.check(d.nodes[i].verified(), std::string("node ") + names[i] + " failed verification");
    }
    o.check(d.covers.size() + 1 == names.size(), std::string("I(") + clone + ") is not a chain");
  }
  const IntervalDiagram w = interval_explore("W^2", 4);
  std::set<std::string> skeletons;
  for (const auto& node : w.nodes) {
    skeletons.insert(node.skeleton);
    o.check(node.verified(), "node " + node.label + " of I(W^2) failed verification");
  }
  o.check(w.nodes.size() >= 3, "I(W^2) has fewer than 3 classes");
  o.check(skeletons.size() == w.nodes.size(), "skeletons in I(W^2) are not pairwise distinct");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("I(W^2) at N=4: ") + std::to_string(w.nodes.size()) +
              " classes found (lower bound)";
  return o;
}

Outcome classifier() {
  Outcome o;
  auto name_of = [](const std::vector<TruthTable>& s) { return classify_clone(s).name; };
  auto expect = [&](const std::vector<TruthTable>& s, const std::string& want, const std::string& what) {
    const std::string got = name_of(s);
    o.check(got == want, what + " classified as " + got);
  };
  expect({expr("x1 -> x2")}, "W^∞", "{→}");
  for (int k : {2, 3, 4}) expect({w_k(k)}, "W^" + std::to_string(k), "{w_" + std::to_string(k) + "}");
  expect({expr("x1 + x2"), TruthTable::constant(0, true)}, "L", "{+,1}");
  expect({expr("x1 & x2"), expr("x1 | x2"), TruthTable::constant(0, false), TruthTable::constant(0, true)}, "M",
         "{∧,∨,0,1}");
  return o;
}

struct Suite {
  int id;
  const char* name;
  const char* title;
  double limit;
  std::function<Outcome()> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {1, "unary", "unary idempotents", 1, unary},
      {2, "lgen", "⌊+⌋ = L_00 and ⌊¬+⌋ = L_11 at N=4", 10, lgen},
      {3, "implication", "⌊→⌋ = B^∞ at N=4", 60, implication},
      {4, "hat", "outer witnesses over → and + at arity <= 3", 60, hat},
      {5, "gadgets", "gadget grid", 120, gadgets},
      {6, "wchain", "W^3 chain at N=5", 60, wchain},
      {7, "zlaws", "Z operator laws at N=4", 30, zlaws},
      {8, "galois", "constraint fragments at N=3", 60, galois},
      {9, "ck", "C∘K = K, K∘C = C at N=3", 60, ck},
      {10, "intervals", "interval fragments", 120, intervals},
      {11, "classifier", "classifier spot checks", 5, classifier},
  };
  return all;
}

CriterionResult run_one(const Suite& s) {
  CriterionResult r{s.id, s.name, s.title, false, 0, s.limit, ""};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = s.run();
    r.ok = o.ok;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.push_back(s.name);
  return out;
}

std::vector<CriterionResult> run_suite(std::string_view name) {
  std::vector<CriterionResult> out;
  for (const auto& s : suites()) {
    if (name == "all" || name == s.name) out.push_back(run_one(s));
  }
  if (out.empty()) throw input_error("unknown suite '" + std::string(name) + "'");
  return out;
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", r.seconds, r.limit);
  std::string s = std::string(r.passed() ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.suite + " (" +
                  timing + ") " + r.title;
  if (!r.ok) s += " [property failed]";
  else if (!r.passed()) s += " [time limit exceeded]";
  if (!r.detail.empty()) s += ": " + r.detail;
  return s;
}

}  // namespace postlat
