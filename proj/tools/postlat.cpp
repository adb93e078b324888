#include <CLI11.hpp>

#include <fstream>
#include <cctype>
#include <iostream>
#include <map>
#include <sstream>

#include "postlat/catalog.hpp"
#include "postlat/closure.hpp"
#include "postlat/constraints.hpp"
#include "postlat/error.hpp"
#include "postlat/formula.hpp"
#include "postlat/interval.hpp"
#include "postlat/verify.hpp"

using namespace postlat;

namespace {

int parse_index(const std::string& s, std::size_t from) {
  const std::string digits = s.substr(from);
  if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos) return -1;
  return std::stoi(digits);
}

TruthTable resolve(const std::string& spec) {
  if (spec.rfind("expr:", 0) == 0) return to_table(parse_expr(spec.substr(5)));
  if (!spec.empty() && std::isdigit(static_cast<unsigned char>(spec[0])) && spec.find(':') != std::string::npos) {
    return TruthTable::parse(spec);
  }
  if (spec == "maj") return majority();
  if (spec == "minr") return minority();
  if (spec == "tmin") return two_thirds_minority();
  if (spec.size() > 1 && spec[0] == 'w' && parse_index(spec, 1) >= 0) return w_k(parse_index(spec, 1));
  if (spec.size() > 1 && spec[0] == 'v' && parse_index(spec, 1) >= 0) return v_j(parse_index(spec, 1));
  if (spec.size() > 2 && spec.rfind("fn", 0) == 0 && parse_index(spec, 2) >= 0) return build_f(parse_index(spec, 2));
  return to_table(parse_expr(spec));
}

std::vector<TruthTable> resolve_all(const std::vector<std::string>& specs) {
  std::vector<TruthTable> out;
  for (const auto& s : specs) out.push_back(resolve(s));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string bits_of(std::uint32_t p, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += ((p >> i) & 1u) ? '1' : '0';
  return s;
}

std::string depth_text(int d) { return d == kInfinity ? "∞" : std::to_string(d); }

int cmd_fn(const std::string& sub, const std::vector<std::string>& specs) {
  const std::vector<TruthTable> fs = resolve_all(specs);
  if (sub == "classify") {
    const Classification c = classify_clone(fs);
    std::cout << c.name << "\n" << describe(c.signature) << "\n";
    return 0;
  }
  for (const auto& f : fs) {
    if (sub == "table") {
      std::cout << f.to_string() << "\nzeros:";
      for (std::uint32_t p : zero_points(f)) std::cout << " " << bits_of(p, f.arity());
      std::cout << "\n";
    } else if (sub == "anf") {
      std::cout << anf_to_string(anf(f)) << "\n";
    } else {
      static const char* kNames[] = {"Ω_00", "Ω_01", "Ω_10", "Ω_11", "Ω_0*", "Ω_*1", "Ω_=", "M", "S", "L", "Λ", "V",
                                     "Ω^(1)", "R", "antimonotone", "W^∞", "U^∞", "B^2", "B^3", "B^4", "B^∞", "D^2",
                                     "D^3", "D^4", "D^∞"};
      std::cout << f.to_string() << "\nmembers:";
      for (const char* n : kNames) {
        if (predicate(f, n)) std::cout << " " << n;
      }
      std::cout << "\nw_depth: " << depth_text(w_depth(f)) << "\nu_depth: " << depth_text(u_depth(f)) << "\n";
    }
  }
  return 0;
}

int cmd_closure(const std::string& kind_name, int max_arity, const std::vector<std::string>& specs) {
  if (max_arity < 0 || max_arity > kMaxBound) throw input_error("--max-arity must be in 0..6");
  const std::map<std::string, ClosureKind> kinds = {{"equational", ClosureKind::Equational},
                                                    {"clone", ClosureKind::Clone},
                                                    {"idempotent", ClosureKind::Idempotent},
                                                    {"iterative", ClosureKind::Iterative}};
  const ClosureResult r = closure(kinds.at(kind_name), resolve_all(specs), max_arity);
  std::cout << write_class_file(r.cls, {"kind " + kind_name, r.exact ? "exact" : "approximate", "sizes " + r.cls.summary()});
  return 0;
}

int cmd_constraint(const std::string& p_file, const std::string& q_file, bool strong, const std::string& spec) {
  const Constraint c(read_relation_file(read_file(p_file)), read_relation_file(read_file(q_file)));
  const TruthTable f = resolve(spec);
  SatisfactionOptions options;
  options.zero_set_shortcut = true;
  auto v = find_violation(f, c.p, c.q, options);
  std::string which = "(P, Q)";
  if (!v && strong) {
    v = find_violation(f, c.q, c.q, options);
    which = "(Q, Q)";
  }
  if (!v) {
    std::cout << (strong ? "strongly satisfied" : "satisfied") << "\n";
    return 0;
  }
  std::cout << "violated: " << which << " matrix\n" << v->to_string();
  return 1;
}

int cmd_interval(const std::string& name, int k, int max_arity, const std::string& dot) {
  const IntervalDiagram d = interval_explore(name, max_arity, k);
  const std::string text = export_dot(d);
  if (dot == "-") {
    std::cout << text;
    return 0;
  }
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw input_error("cannot write " + dot);
    out << text;
  }
  std::cout << "interval " << d.clone << " max_arity " << d.max_arity << " classes " << d.nodes.size()
            << (d.complete ? "" : " (lower bound)") << "\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const auto& n = d.nodes[i];
    std::cout << "class " << i << " " << n.label << " skeleton " << (n.skeleton.empty() ? "-" : n.skeleton) << " sizes " << n.cls.summary()
              << " closed_at " << n.checked_at << " generates_at " << n.generated_at
              << (n.verified() ? " verified" : n.consistent() ? " partially-verified" : " FAILED") << "\n";
  }
  for (const auto& [hi, lo] : d.covers) std::cout << "cover " << d.nodes[hi].label << " -> " << d.nodes[lo].label << "\n";
  bool all = true;
  for (const auto& n : d.nodes) all = all && n.consistent();
  return all ? 0 : 1;
}

int cmd_verify(const std::string& suite) {
  bool ok = true;
  for (const auto& r : run_suite(suite)) {
    std::cout << format_result(r) << std::endl;
    ok = ok && r.passed();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"postlat: Boolean function classes, clones and their intervals"};
  app.require_subcommand(1);

  auto* fn = app.add_subcommand("fn", "inspect functions: table, anf, props, classify");
  std::string fn_sub;
  std::vector<std::string> fn_specs;
  fn->add_option("command", fn_sub)->required()->check(CLI::IsMember({"table", "anf", "props", "classify"}));
  fn->add_option("specs", fn_specs)->required();

  auto* cl = app.add_subcommand("closure", "bounded closure of a generator set");
  std::string kind = "clone";
  int cl_arity = kDefaultBound;
  std::vector<std::string> cl_specs;
  cl->add_option("--kind", kind)->check(CLI::IsMember({"equational", "clone", "idempotent", "iterative"}));
  cl->add_option("--max-arity", cl_arity);
  cl->add_option("specs", cl_specs)->required();

  auto* co = app.add_subcommand("constraint", "check a function against a relational constraint");
  std::string p_file, q_file, co_spec;
  bool strong = false;
  co->add_option("--p", p_file)->required();
  co->add_option("--q", q_file)->required();
  co->add_flag("--strong", strong);
  co->add_option("spec", co_spec)->required();

  auto* iv = app.add_subcommand("interval", "explore the interval of idempotents below a clone");
  std::string iv_name, dot;
  int iv_k = 2, iv_arity = 3;
  iv->add_option("clone", iv_name)->required();
  iv->add_option("--k", iv_k);
  iv->add_option("--max-arity", iv_arity);
  iv->add_option("--dot", dot, "write DOT to FILE, or '-' for standard output");

  auto* ve = app.add_subcommand("verify", "run acceptance suites");
  std::string suite = "all";
  ve->add_option("suite", suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*fn) return cmd_fn(fn_sub, fn_specs);
    if (*cl) return cmd_closure(kind, cl_arity, cl_specs);
    if (*co) return cmd_constraint(p_file, q_file, strong, co_spec);
    if (*iv) return cmd_interval(iv_name, iv_k, iv_arity, dot);
    if (*ve) return cmd_verify(suite);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const consistency_error& e) {
    std::cerr << "consistency check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
