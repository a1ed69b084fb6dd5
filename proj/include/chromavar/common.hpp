#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromavar {

// Malformed input: bad files, non-groups, out-of-range indices. CLI exit 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured enumeration limit was exceeded. Never a partial answer.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal invariant: a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct Caps {
  int max_group_order = 20000;      // closure cap for load_group
  long long max_enum = 10'000'000;  // tuple / matrix enumeration cap
  int max_level = 500;              // level-set cap for isomorphism search
};

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline void ensure_prime(int p) {
  if (!is_prime(p))
    throw input_error("p must be prime, got " + std::to_string(p));
}

inline long long checked_pow(long long base, int exp, long long cap,
                             const char* what) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap)
      throw cap_exceeded(std::string(what) + ": " + std::to_string(base) + "^" +
                         std::to_string(exp) + " exceeds cap " +
                         std::to_string(cap));
  }
  return r;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // smaller index wins so representatives are least elements
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

// Partition of {0..ambient-1}. Class ids are dense, numbered by first
// occurrence in ambient order; each representative is the least member.
struct QuotientWitness {
  int ambient = 0;
  std::vector<int> class_of;
  std::vector<int> representative;

  int classes() const { return static_cast<int>(representative.size()); }
};

inline QuotientWitness quotient_from(DisjointSets& ds) {
  QuotientWitness w;
  w.ambient = ds.size();
  w.class_of.assign(w.ambient, -1);
  for (int i = 0; i < w.ambient; ++i) {
    int root = ds.find(i);
    if (w.class_of[root] < 0) {
      w.class_of[root] = static_cast<int>(w.representative.size());
      w.representative.push_back(root);
    }
    w.class_of[i] = w.class_of[root];
  }
  return w;
}

// Partition induced by equal keys; class order = first occurrence.
template <typename Key>
QuotientWitness quotient_by_key(const std::vector<Key>& keys) {
  QuotientWitness w;
  w.ambient = static_cast<int>(keys.size());
  w.class_of.assign(w.ambient, -1);
  std::map<Key, int> seen;
  for (int i = 0; i < w.ambient; ++i) {
    auto [it, fresh] = seen.emplace(keys[i], static_cast<int>(w.representative.size()));
    if (fresh) w.representative.push_back(i);
    w.class_of[i] = it->second;
  }
  return w;
}

}  // namespace chromavar
