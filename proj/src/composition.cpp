#include "postlat/composition.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "postlat/error.hpp"

namespace postlat {

namespace {

// Set of fixed-width word vectors with open addressing over indices into a
// flat buffer.
class StateSet {
 public:
  explicit StateSet(std::size_t width) : width_(width), slots_(1024, kEmpty) {}

  std::size_t size() const { return count_; }
  const Table* at(std::size_t i) const { return data_.data() + i * width_; }

  void insert(const Table* s) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t h = hash(s) & (slots_.size() - 1);
    while (slots_[h] != kEmpty) {
      if (std::equal(s, s + width_, at(slots_[h]))) return;
      h = (h + 1) & (slots_.size() - 1);
    }
    slots_[h] = static_cast<std::uint32_t>(count_++);
    data_.insert(data_.end(), s, s + width_);
  }

 private:
  static constexpr std::uint32_t kEmpty = 0xFFFFFFFFu;

  std::size_t hash(const Table* s) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    for (std::size_t i = 0; i < width_; ++i) {
      h ^= s[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
      h *= 0xBF58476D1CE4E5B9ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

  void grow() {
    if (count_ >= 0x7FFFFFFFu) throw resource_error("composition state space too large");
    std::vector<std::uint32_t> fresh(slots_.size() * 2, kEmpty);
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t h = hash(at(i)) & (fresh.size() - 1);
      while (fresh[h] != kEmpty) h = (h + 1) & (fresh.size() - 1);
      fresh[h] = static_cast<std::uint32_t>(i);
    }
    slots_.swap(fresh);
  }

  std::size_t width_;
  std::vector<Table> data_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

class ResultSet {
 public:
  explicit ResultSet(int k) : dense_(k <= 4) {
    if (dense_) seen_.assign((std::size_t{1} << bits::points(k)) / 64 + 1, 0);
  }

  bool insert(Table t) {
    if (dense_) {
      Table& w = seen_[t >> 6];
      const Table m = Table{1} << (t & 63);
      if (w & m) return false;
      w |= m;
      return true;
    }
    return sparse_.insert(t);
  }

 private:
  struct Sparse {
    std::vector<Table> slots = std::vector<Table>(1024, kEmpty);
    std::vector<std::uint8_t> has_empty_key = {0};
    std::size_t count = 0;
    static constexpr Table kEmpty = ~Table{0};

    static std::size_t mix(Table t) {
      t ^= t >> 33;
      t *= 0xFF51AFD7ED558CCDull;
      t ^= t >> 33;
      return static_cast<std::size_t>(t);
    }

    bool insert(Table t) {
      if (t == kEmpty) {
        if (has_empty_key[0]) return false;
        has_empty_key[0] = 1;
        return true;
      }
      if ((count + 1) * 2 > slots.size()) {
        std::vector<Table> old(slots.size() * 2, kEmpty);
        old.swap(slots);
        count = 0;
        for (Table u : old) {
          if (u != kEmpty) place(u);
        }
      }
      return place(t);
    }

    bool place(Table t) {
      std::size_t h = mix(t) & (slots.size() - 1);
      while (slots[h] != kEmpty) {
        if (slots[h] == t) return false;
        h = (h + 1) & (slots.size() - 1);
      }
      slots[h] = t;
      ++count;
      return true;
    }
  };

  bool dense_;
  std::vector<Table> seen_;
  Sparse sparse_;
};

void spend(std::uint64_t* budget, std::uint64_t amount) {
  if (!budget) return;
  if (*budget < amount) throw resource_error("composition search exceeded its work budget");
  *budget -= amount;
}

}  // namespace

std::uint64_t default_transition_budget() {
  if (const char* env = std::getenv("POSTLAT_MAX_TRANSITIONS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw input_error("POSTLAT_MAX_TRANSITIONS must be a non-negative integer");
    }
  }
  return 4'000'000'000ull;
}

bool for_each_composition(const std::vector<Outer>& outers, const std::vector<Table>& inner, int k,
                          const std::function<bool(Table)>& visit, std::uint64_t* budget) {
  const Table full = bits::full(k);
  ResultSet results(k);
  auto emit = [&](Table t) { return !results.insert(t) || visit(t); };

  int top = 0;
  for (const auto& o : outers) top = std::max(top, o.arity);
  for (int n = 0; n <= top; ++n) {
    std::vector<Table> tables;
    for (const auto& o : outers) {
      if (o.arity == n) tables.push_back(o.table);
    }
    if (tables.empty()) continue;
    if (n == 0) {
      for (Table t : tables) {
        if (!emit((t & 1u) ? full : 0)) return false;
      }
      continue;
    }
    if (inner.empty()) continue;
    if (n > kWordArity) throw input_error("outer arity above 6");
    std::size_t width = std::size_t{1} << n;
    StateSet current(width);
    std::vector<Table> state(width);
    for (Table t : tables) {
      for (std::size_t b = 0; b < width; ++b) state[b] = ((t >> b) & 1u) ? full : 0;
      current.insert(state.data());
    }
    while (width > 1) {
      const std::size_t half = width / 2;
      spend(budget, static_cast<std::uint64_t>(current.size()) * inner.size());
      if (half == 1) {
        for (std::size_t i = 0; i < current.size(); ++i) {
          const Table lo = current.at(i)[0], hi = current.at(i)[1];
          for (Table c : inner) {
            if (!emit((lo & ~c) | (hi & c))) return false;
          }
        }
        break;
      }
      StateSet next(half);
      std::vector<Table> s(half);
      for (std::size_t i = 0; i < current.size(); ++i) {
        const Table* old = current.at(i);
        for (Table c : inner) {
          for (std::size_t b = 0; b < half; ++b) s[b] = (old[2 * b] & ~c) | (old[2 * b + 1] & c);
          next.insert(s.data());
        }
      }
      current = std::move(next);
      width = half;
    }
  }
  return true;
}

std::vector<Table> composition_image(const std::vector<Outer>& outers, const std::vector<Table>& inner, int k,
                                     std::uint64_t* budget) {
  std::vector<Table> out;
  for_each_composition(outers, inner, k, [&](Table t) {
    out.push_back(t);
    return true;
  }, budget);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Table> subalgebra(const std::vector<Outer>& ops, std::vector<Table> seed, const std::vector<Table>& extra,
                              int k, std::uint64_t* budget) {
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  const std::uint64_t universe = k >= 6 ? 0 : (std::uint64_t{1} << bits::points(k));
  std::vector<Table> x = std::move(seed);
  while (true) {
    if (universe && x.size() == universe) return x;
    std::vector<Table> inner = x;
    inner.insert(inner.end(), extra.begin(), extra.end());
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    const std::vector<Table> image = composition_image(ops, inner, k, budget);
    std::vector<Table> merged;
    std::set_union(x.begin(), x.end(), image.begin(), image.end(), std::back_inserter(merged));
    if (merged.size() == x.size()) return x;
    x.swap(merged);
  }
}

}  // namespace postlat
