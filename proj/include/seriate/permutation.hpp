#ifndef SERIATE_PERMUTATION_HPP
#define SERIATE_PERMUTATION_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_set>
#include <vector>

#include "seriate/linalg.hpp"
#include "seriate/matrix.hpp"

namespace seriate {

inline constexpr std::uint64_t kDefaultExplosionCap = 10'000'000;

// An ordering of n nodes, stored as the 1-based node sequence itself.
class Permutation {
 public:
  Permutation() = default;
  // Throws BadParameter unless mapping is a bijection on 1..n.
  explicit Permutation(std::vector<int> mapping);

  int order() const { return static_cast<int>(map_.size()); }
  const std::vector<int>& mapping() const { return map_; }
  int operator[](int i) const { return map_[i]; }  // 0-based position

  Permutation reversed() const;
  std::string to_csv() const;

  bool operator==(const Permutation& o) const { return map_ == o.map_; }
  bool operator<(const Permutation& o) const { return map_ < o.map_; }

 private:
  std::vector<int> map_;
};

// The lexicographically smaller of p and its reversal. Two orderings that
// read the same from either end of the shelf are the same seriation.
Permutation canonicalize(const Permutation& p);

// Set of reversal-canonical permutations with O(1) membership. Orderings
// are packed to 16-bit entries internally, which bounds n by 65535; every
// enumeration routine in this library explodes long before that.
class PermutationSet {
 public:
  using Key = std::vector<std::uint16_t>;

  PermutationSet() = default;

  // Canonicalizes, then inserts. Returns true when the member is new.
  // Members of one set must share the same order n.
  bool insert(const Permutation& p);
  // Same, for an ordering already packed as 1-based 16-bit values. The
  // buffer is canonicalized in place. Engines use this to skip building
  // Permutation objects in their inner loops.
  bool insert_packed(Key ordering);

  bool contains(const Permutation& p) const;
  std::size_t size() const { return keys_.size(); }
  bool empty() const { return keys_.empty(); }
  int order() const { return order_; }
  void reserve(std::size_t n) { keys_.reserve(n); }

  void merge(const PermutationSet& other);
  bool is_subset_of(const PermutationSet& other) const;
  bool operator==(const PermutationSet& o) const { return keys_ == o.keys_; }

  // Members in lexicographic order; the only iteration order exposed, so
  // output never depends on hash table layout.
  std::vector<Permutation> sorted_members() const;
  std::vector<Key> sorted_keys() const;

  // One permutation per line, comma-separated 1-based indices, sorted.
  void write_lines(std::ostream& out) const;

 private:
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  std::unordered_set<Key, KeyHash> keys_;
  int order_ = 0;
};

// All permutations that sort x nondecreasingly, with every ordering of each
// tie block. Blocks are maximal runs of the sorted values whose consecutive
// gaps are <= tol, so tol-closeness is applied transitively. Throws
// ExplosionGuard when prod(block size!) exceeds cap.
PermutationSet tie_expand(const Vector& x, double tol, std::uint64_t cap = kDefaultExplosionCap);

// prod(block size!) for the given vector and tolerance: the number of
// orderings tie_expand generates before canonicalization. Saturates at
// UINT64_MAX.
std::uint64_t tie_expand_count(const Vector& x, double tol);

// 1e-8 * max|x_i|: tie tolerance matched to the scale of x.
double default_tie_tol(const Vector& x);

// Orderings of the unique Fiedler vector. Throws MultipleFiedler when the
// eigenspace has dimension > 1. A negative tol selects default_tie_tol.
PermutationSet seriate_simple(const FiedlerSpace& fs, double tol = -1.0,
                              std::uint64_t cap = kDefaultExplosionCap);

}  // namespace seriate

#endif
