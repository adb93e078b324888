#include "postlat/interval.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "postlat/catalog.hpp"
#include "postlat/closure.hpp"
#include "postlat/error.hpp"

namespace postlat {

namespace {

constexpr std::size_t kMaxNodes = 512;

struct CloneName {
  std::string canonical;
  std::vector<std::string> closed_form;  // empty for W^k and U^k
  char family = 0;                       // 'W' or 'U' for the parametrized clones
  int k = 0;
};

CloneName parse_clone(std::string_view name, int k) {
  static const std::map<std::string, std::vector<std::string>, std::less<>> kClosed = {
      {"Ω", {"Ω", "Ω_=", "R"}},       {"Ω_*1", {"Ω_*1", "Ω_11", "R_11"}},
      {"Ω_0*", {"Ω_0*", "Ω_00", "R_00"}}, {"L", {"L", "L_="}},
      {"L_0*", {"L_0*", "L_00"}},     {"L_*1", {"L_*1", "L_11"}},
  };
  std::string n(name);
  if (n.rfind("Omega", 0) == 0) n = "Ω" + n.substr(5);
  if (auto it = kClosed.find(n); it != kClosed.end()) return {n, it->second, 0, 0};
  if (n == "W" || n == "U") n += "^" + std::to_string(k);
  const ClassId id = parse_class_id(n);
  if ((id.family != Family::W && id.family != Family::U) || id.k == kInfinity) {
    throw input_error("no interval exploration for '" + std::string(name) + "'");
  }
  return {to_string(id), {}, id.family == Family::W ? 'W' : 'U', id.k};
}

std::string skeleton_label(const FunctionClass& cls, int k) { return skeleton_of(cls, k).hash_label(); }

void check_closed(IntervalNode& node, int bound) {
  node.checked_at = bound;
  node.composition_closed = is_composition_closed(node.cls.restrict_to(bound));
}

void check_generation(IntervalNode& node, const FunctionClass& clone_fragment, int bound) {
  const FunctionClass low = node.cls.restrict_to(bound);
  node.generated_at = bound;
  node.generates_clone = clone_closure(low.canonical_members(), bound) == clone_fragment.restrict_to(bound);
}

void finish(IntervalDiagram& d) {
  std::stable_sort(d.nodes.begin(), d.nodes.end(), [](const IntervalNode& a, const IntervalNode& b) {
    if (a.cls.size() != b.cls.size()) return a.cls.size() > b.cls.size();
    return a.label < b.label;
  });
  std::vector<FunctionClass> classes;
  for (const auto& n : d.nodes) classes.push_back(n.cls);
  d.covers = hasse_covers(classes);
}

IntervalDiagram explore_closed(const CloneName& c, int n) {
  IntervalDiagram d{c.canonical, n, true, {}, {}};
  const FunctionClass clone = fragment(c.canonical, n);
  const int bound = c.canonical[0] == 'L' ? n : std::min(n, 3);
  for (const auto& name : c.closed_form) {
    IntervalNode node{name, fragment(name, n), "", false, 0, false, 0, true};
    check_closed(node, bound);
    check_generation(node, clone, bound);
    d.nodes.push_back(std::move(node));
  }
  finish(d);
  return d;
}

IntervalDiagram explore_w(int k, int n) {
  if (n > 4) throw resource_error("W^k interval exploration is limited to max arity 4");
  const std::string wk = "W^" + std::to_string(k);
  const FunctionClass top = fragment(wk, n);
  const FunctionClass bottom = fragment("B^" + std::to_string(k), n);

  std::map<std::vector<std::vector<Table>>, std::string> found;
  std::vector<FunctionClass> order;
  auto add = [&](const FunctionClass& cls, const std::string& label) {
    if (found.emplace(cls.levels(), label).second) {
      order.push_back(cls);
      if (order.size() > kMaxNodes) throw resource_error("interval exploration exceeded " + std::to_string(kMaxNodes) + " classes");
      return true;
    }
    return false;
  };

  add(top, wk);
  add(fragment(wk + "_=", n), wk + "_=");
  for (int j = 2; j < k; ++j) add(fragment("B^" + std::to_string(j) + "∩" + wk, n), "B^" + std::to_string(j) + "∩" + wk);
  add(bottom, "B^" + std::to_string(k));

  const FunctionClass base = bottom.unite(equational_closure({w_k(k)}, n));
  for (const auto& f : top.canonical_members()) {
    add(z_operator(base.unite(equational_closure({f}, n)), k), "");
  }
  for (std::size_t done = 0; done < order.size();) {
    const std::size_t end = order.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = std::max(i + 1, done); j < end; ++j) {
        add(order[i].intersect(order[j]), "");
        add(z_operator(order[i].unite(order[j]), k), "");
      }
    }
    done = end;
  }

  // K lies between B^k and W^k, so [K] = W^k as soon as K holds a generator
  // of W^k; w_k is one when its arity fits the bound.
  const TruthTable gen = w_k(k);
  const bool gen_fits = gen.arity() <= n && clone_closure({gen}, n) == top;

  IntervalDiagram d{wk, n, false, {}, {}};
  for (const auto& cls : order) {
    IntervalNode node{found.at(cls.levels()), cls, skeleton_label(cls, k), false, 0, false, 0, false};
    if (node.label.empty()) node.label = "K#" + node.skeleton.substr(0, 8);
    node.certified = bottom.subset_of(cls) && cls.subset_of(top) && is_minor_closed(cls) && z_operator(cls, k) == cls;
    check_closed(node, std::min(n, 3));
    if (gen_fits) {
      node.generated_at = n;
      node.generates_clone = cls.contains(gen);
    }
    d.nodes.push_back(std::move(node));
  }
  finish(d);
  return d;
}

std::string dual_label(std::string s) {
  for (char& c : s) {
    if (c == 'W') c = 'U';
    else if (c == 'B') c = 'D';
  }
  return s;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const std::vector<FunctionClass>& classes) {
  const std::size_t m = classes.size();
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      below[i][j] = i != j && classes[j].subset_of(classes[i]) && !(classes[i] == classes[j]);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t l = 0; l < m && cover; ++l) cover = !(below[i][l] && below[l][j]);
      if (cover) out.push_back({i, j});
    }
  }
  return out;
}

IntervalDiagram interval_explore(std::string_view clone, int max_arity, int k) {
  if (max_arity < 1 || max_arity > kMaxBound) throw input_error("max arity must be in 1.." + std::to_string(kMaxBound));
  const CloneName c = parse_clone(clone, k);
  if (!c.closed_form.empty()) return explore_closed(c, max_arity);
  IntervalDiagram d = explore_w(c.k, max_arity);
  if (c.family == 'U') {
    d.clone = dual_label(d.clone);
    for (auto& node : d.nodes) {
      node.cls = node.cls.dual();
      if (node.label.rfind("K#", 0) == 0) {
        node.skeleton = skeleton_label(node.cls, c.k);
        node.label = "K#" + node.skeleton.substr(0, 8);
      } else {
        node.label = dual_label(node.label);
        node.skeleton = skeleton_label(node.cls, c.k);
      }
    }
    finish(d);
  }
  return d;
}

std::string export_dot(const IntervalDiagram& diagram) {
  std::ostringstream os;
  os << "digraph interval {\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << diagram.nodes[i].label << "\"];\n";
  }
  for (const auto& [hi, lo] : diagram.covers) os << "  n" << hi << " -> n" << lo << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace postlat
