#ifndef SERIATE_PQTREE_HPP
#define SERIATE_PQTREE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "seriate/permutation.hpp"

namespace seriate {

// Ordering constraints over 1-based leaf labels: a P node permutes its
// children freely, a Q node only fixes or reverses their order.
class PQTree {
 public:
  static PQTree leaf(int label);
  static PQTree p_node(std::vector<PQTree> children);
  static PQTree q_node(std::vector<PQTree> children);

  bool is_leaf() const { return kind_ == Kind::leaf; }
  bool is_p() const { return kind_ == Kind::p; }
  int label() const { return label_; }
  const std::vector<PQTree>& children() const { return children_; }

  int leaf_count() const;
  // Upper bound on the frontier size before canonicalization, saturating
  // at UINT64_MAX.
  std::uint64_t frontier_bound() const;

 private:
  enum class Kind { leaf, p, q };
  Kind kind_ = Kind::leaf;
  int label_ = 0;
  std::vector<PQTree> children_;
};

// Every leaf order the tree admits, as a reversal-canonical set. Leaf labels
// must be exactly 1..n. Throws ExplosionGuard when frontier_bound() exceeds
// cap.
PermutationSet pq_frontier(const PQTree& tree, std::uint64_t cap = kDefaultExplosionCap);

}  // namespace seriate

#endif
