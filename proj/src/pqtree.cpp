#include "seriate/pqtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "seriate/errors.hpp"

namespace seriate {

PQTree PQTree::leaf(int label) {
  if (label < 1) throw BadParameter("leaf labels are 1-based");
  PQTree t;
  t.kind_ = Kind::leaf;
  t.label_ = label;
  return t;
}

PQTree PQTree::p_node(std::vector<PQTree> children) {
  if (children.empty()) throw BadParameter("internal node needs children");
  PQTree t;
  t.kind_ = Kind::p;
  t.children_ = std::move(children);
  return t;
}

PQTree PQTree::q_node(std::vector<PQTree> children) {
  if (children.empty()) throw BadParameter("internal node needs children");
  PQTree t;
  t.kind_ = Kind::q;
  t.children_ = std::move(children);
  return t;
}

int PQTree::leaf_count() const {
  if (kind_ == Kind::leaf) return 1;
  int n = 0;
  for (const PQTree& c : children_) n += c.leaf_count();
  return n;
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > top / a) return top;
  return a * b;
}

}  // namespace

std::uint64_t PQTree::frontier_bound() const {
  if (kind_ == Kind::leaf) return 1;
  std::uint64_t total = 1;
  for (const PQTree& c : children_) total = sat_mul(total, c.frontier_bound());
  if (kind_ == Kind::p) {
    for (std::uint64_t f = 2; f <= children_.size(); ++f) total = sat_mul(total, f);
  } else if (children_.size() >= 2) {
    total = sat_mul(total, 2);
  }
  return total;
}

namespace {

void collect_labels(const PQTree& t, std::vector<int>& labels) {
  if (t.is_leaf()) {
    labels.push_back(t.label());
    return;
  }
  for (const PQTree& c : t.children()) collect_labels(c, labels);
}

using Seq = std::vector<std::uint16_t>;

// All leaf sequences of one node. Frontier sizes are capped before this
// runs, so materializing the lists is fine.
std::vector<Seq> arrangements(const PQTree& t) {
  if (t.is_leaf()) return {Seq{static_cast<std::uint16_t>(t.label())}};

  std::vector<std::vector<Seq>> child_arr;
  child_arr.reserve(t.children().size());
  for (const PQTree& c : t.children()) child_arr.push_back(arrangements(c));

  const std::size_t m = child_arr.size();
  std::vector<std::vector<std::size_t>> child_orders;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (t.is_p()) {
    do child_orders.push_back(order);
    while (std::next_permutation(order.begin(), order.end()));
  } else {
    child_orders.push_back(order);
    if (m >= 2) {
      std::reverse(order.begin(), order.end());
      child_orders.push_back(order);
    }
  }

  std::vector<Seq> out;
  for (const auto& ord : child_orders) {
    // Odometer over each child's arrangement list.
    std::vector<std::size_t> pick(m, 0);
    for (;;) {
      Seq s;
      for (std::size_t c : ord) {
        const Seq& part = child_arr[c][pick[c]];
        s.insert(s.end(), part.begin(), part.end());
      }
      out.push_back(std::move(s));

      std::size_t carry = 0;
      while (carry < m && ++pick[carry] == child_arr[carry].size()) pick[carry++] = 0;
      if (carry == m) break;
    }
  }
  return out;
}

}  // namespace

PermutationSet pq_frontier(const PQTree& tree, std::uint64_t cap) {
  std::vector<int> labels;
  collect_labels(tree, labels);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i) + 1)
      throw BadParameter("leaf labels must be exactly 1..n");

  const std::uint64_t bound = tree.frontier_bound();
  if (bound > cap)
    throw ExplosionGuard("frontier bound " + std::to_string(bound) + " exceeds cap " +
                         std::to_string(cap));

  PermutationSet out;
  for (Seq& s : arrangements(tree)) out.insert_packed(std::move(s));
  return out;
}

}  // namespace seriate
