#include "postlat/function_class.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "postlat/error.hpp"

namespace postlat {

namespace {

void check_bound(int n) {
  if (n < 0 || n > kMaxBound) throw input_error("arity bound must lie in 0.." + std::to_string(kMaxBound));
}

void normalize(std::vector<Table>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

int essential_count(Table t, int arity) {
  int c = 0;
  for (int i = 0; i < arity; ++i) c += bits::depends_on(t, arity, i);
  return c;
}

Table reduce_word(Table t, int arity, int* essential) {
  int n = arity;
  for (int i = arity - 1; i >= 0; --i) {
    if (!bits::depends_on(t, n, i)) {
      t = bits::drop(t, n, i);
      --n;
    }
  }
  if (essential) *essential = n;
  return t;
}

std::vector<Table> equivalence_orbit(Table reduced, int essential, int arity) {
  Table t = reduced;
  for (int a = essential; a < arity; ++a) t = bits::extend(t, a);
  std::vector<Table> out;
  bits::for_each_permutation(t, arity, [&](Table u) { out.push_back(u); });
  normalize(out);
  return out;
}

void add_with_equivalents(std::vector<std::vector<Table>>& levels, Table t, int arity) {
  int e = 0;
  const Table r = reduce_word(t, arity, &e);
  for (int a = e; a < static_cast<int>(levels.size()); ++a) {
    for (Table u : equivalence_orbit(r, e, a)) levels[a].push_back(u);
  }
}

FunctionClass::FunctionClass(int max_arity) : max_arity_(max_arity) {
  check_bound(max_arity);
  levels_.assign(max_arity + 1, {});
}

FunctionClass FunctionClass::from_levels(int max_arity, std::vector<std::vector<Table>> levels) {
  FunctionClass k(max_arity);
  if (static_cast<int>(levels.size()) != max_arity + 1) throw input_error("level count differs from bound");
  for (int a = 0; a <= max_arity; ++a) {
    for (Table& t : levels[a]) t &= bits::full(a);
    normalize(levels[a]);
  }
  k.levels_ = std::move(levels);
  return k;
}

FunctionClass FunctionClass::from_functions(int max_arity, const std::vector<TruthTable>& functions) {
  FunctionClass k(max_arity);
  std::set<std::pair<int, Table>> reps;
  for (const auto& f : functions) {
    const TruthTable r = reduce(f);
    if (r.arity() > max_arity) {
      throw input_error("function " + f.to_string() + " has more than " + std::to_string(max_arity) +
                        " essential variables");
    }
    reps.insert({r.arity(), bits::permutation_min(r.word(), r.arity())});
  }
  for (const auto& [e, r] : reps) {
    for (int a = e; a <= max_arity; ++a) {
      for (Table u : equivalence_orbit(r, e, a)) k.levels_[a].push_back(u);
    }
  }
  for (auto& lv : k.levels_) normalize(lv);
  return k;
}

FunctionClass FunctionClass::from_filter(int max_arity, const std::function<bool(Table, int)>& keep) {
  if (max_arity > 4) throw resource_error("exhaustive enumeration is limited to arity 4");
  FunctionClass k(max_arity);
  for (int a = 0; a <= max_arity; ++a) {
    const Table count = Table{1} << bits::points(a);
    for (Table t = 0; t < count; ++t) {
      if (keep(t, a)) k.levels_[a].push_back(t);
    }
  }
  return k;
}

bool FunctionClass::contains(Table t, int arity) const {
  if (arity < 0 || arity > max_arity_) return false;
  const auto& lv = levels_[arity];
  return std::binary_search(lv.begin(), lv.end(), t & bits::full(arity));
}

bool FunctionClass::contains(const TruthTable& f) const {
  if (f.arity() <= max_arity_) return contains(f.word(), f.arity());
  const TruthTable r = reduce(f);
  if (r.arity() > max_arity_) return false;
  return contains(r.word(), r.arity());
}

bool FunctionClass::empty() const {
  return std::all_of(levels_.begin(), levels_.end(), [](const auto& lv) { return lv.empty(); });
}

std::size_t FunctionClass::size() const {
  std::size_t n = 0;
  for (const auto& lv : levels_) n += lv.size();
  return n;
}

std::vector<Table> FunctionClass::essential_representatives(int arity) const {
  std::vector<Table> out;
  for (Table t : levels_.at(arity)) {
    if (essential_count(t, arity) == arity && bits::permutation_min(t, arity) == t) out.push_back(t);
  }
  return out;
}

std::vector<TruthTable> FunctionClass::canonical_members() const {
  std::vector<TruthTable> out;
  for (int a = 0; a <= max_arity_; ++a) {
    for (Table t : essential_representatives(a)) out.push_back(TruthTable::from_word(a, t));
  }
  return out;
}

bool FunctionClass::subset_of(const FunctionClass& other) const {
  if (other.max_arity_ < max_arity_) return false;
  for (int a = 0; a <= max_arity_; ++a) {
    if (!std::includes(other.levels_[a].begin(), other.levels_[a].end(), levels_[a].begin(), levels_[a].end())) {
      return false;
    }
  }
  return true;
}

FunctionClass FunctionClass::intersect(const FunctionClass& other) const {
  if (other.max_arity_ != max_arity_) throw input_error("intersect: bounds differ");
  FunctionClass k(max_arity_);
  for (int a = 0; a <= max_arity_; ++a) {
    std::set_intersection(levels_[a].begin(), levels_[a].end(), other.levels_[a].begin(), other.levels_[a].end(),
                          std::back_inserter(k.levels_[a]));
  }
  return k;
}

FunctionClass FunctionClass::unite(const FunctionClass& other) const {
  if (other.max_arity_ != max_arity_) throw input_error("unite: bounds differ");
  FunctionClass k(max_arity_);
  for (int a = 0; a <= max_arity_; ++a) {
    std::set_union(levels_[a].begin(), levels_[a].end(), other.levels_[a].begin(), other.levels_[a].end(),
                   std::back_inserter(k.levels_[a]));
  }
  return k;
}

FunctionClass FunctionClass::restrict_to(int max_arity) const {
  if (max_arity > max_arity_) throw input_error("restrict_to: bound above current bound");
  FunctionClass k(max_arity);
  for (int a = 0; a <= max_arity; ++a) k.levels_[a] = levels_[a];
  return k;
}

FunctionClass FunctionClass::dual() const {
  FunctionClass k(max_arity_);
  for (int a = 0; a <= max_arity_; ++a) {
    for (Table t : levels_[a]) k.levels_[a].push_back(bits::dual(t, a));
    normalize(k.levels_[a]);
  }
  return k;
}

std::string FunctionClass::summary() const {
  std::ostringstream os;
  os << "[";
  for (int a = 0; a <= max_arity_; ++a) os << (a ? " " : "") << levels_[a].size();
  os << "]";
  return os.str();
}

FunctionClass projections(int max_arity) {
  std::vector<std::vector<Table>> levels(max_arity + 1);
  for (int a = 1; a <= max_arity; ++a) {
    for (int i = 0; i < a; ++i) levels[a].push_back(bits::var(a, i));
  }
  return FunctionClass::from_levels(max_arity, std::move(levels));
}

FunctionClass all_functions(int max_arity) {
  return FunctionClass::from_filter(max_arity, [](Table, int) { return true; });
}

std::string write_class_file(const FunctionClass& k, const std::vector<std::string>& header_comments) {
  std::ostringstream os;
  os << "max_arity " << k.max_arity() << "\n";
  for (const auto& c : header_comments) os << "# " << c << "\n";
  for (const auto& f : k.canonical_members()) os << f.to_string() << "\n";
  return os.str();
}

FunctionClass read_class_file(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int bound = -1;
  std::vector<TruthTable> fs;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    if (bound < 0) {
      std::istringstream hs(line);
      std::string key;
      if (!(hs >> key >> bound) || key != "max_arity") {
        throw input_error("class file line " + std::to_string(line_no) + ": expected 'max_arity N'");
      }
      check_bound(bound);
      continue;
    }
    fs.push_back(TruthTable::parse(line));
  }
  if (bound < 0) throw input_error("class file: missing 'max_arity N' line");
  return FunctionClass::from_functions(bound, fs);
}

}  // namespace postlat
