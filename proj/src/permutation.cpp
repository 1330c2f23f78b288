#include "seriate/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>

#include "seriate/errors.hpp"

namespace seriate {

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  const int n = static_cast<int>(map_.size());
  if (n == 0) throw BadParameter("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : map_) {
    if (v < 1 || v > n || seen[v]) throw BadParameter("mapping is not a bijection on 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::reversed() const {
  std::vector<int> r(map_.rbegin(), map_.rend());
  Permutation p;
  p.map_ = std::move(r);
  return p;
}

std::string Permutation::to_csv() const {
  std::string s;
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(map_[i]);
  }
  return s;
}

Permutation canonicalize(const Permutation& p) {
  const std::vector<int>& m = p.mapping();
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int fwd = m[i], rev = m[n - 1 - i];
    if (fwd < rev) return p;
    if (fwd > rev) return p.reversed();
  }
  return p;
}

namespace {

// Reverses the buffer when the reversal is lexicographically smaller.
void canonicalize_key(PermutationSet::Key& k) {
  const std::size_t n = k.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint16_t fwd = k[i], rev = k[n - 1 - i];
    if (fwd < rev) return;
    if (fwd > rev) {
      std::reverse(k.begin(), k.end());
      return;
    }
  }
}

PermutationSet::Key pack(const Permutation& p) {
  PermutationSet::Key k(p.mapping().size());
  for (std::size_t i = 0; i < k.size(); ++i) k[i] = static_cast<std::uint16_t>(p.mapping()[i]);
  return k;
}

}  // namespace

std::size_t PermutationSet::KeyHash::operator()(const Key& k) const {
  // FNV-1a over the 16-bit entries.
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint16_t v : k) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool PermutationSet::insert(const Permutation& p) {
  if (p.order() > std::numeric_limits<std::uint16_t>::max())
    throw BadParameter("permutation order exceeds set capacity");
  return insert_packed(pack(p));
}

bool PermutationSet::insert_packed(Key ordering) {
  if (ordering.empty()) throw BadParameter("empty ordering");
  if (order_ == 0)
    order_ = static_cast<int>(ordering.size());
  else if (order_ != static_cast<int>(ordering.size()))
    throw BadParameter("set members must share one order");
  canonicalize_key(ordering);
  return keys_.insert(std::move(ordering)).second;
}

bool PermutationSet::contains(const Permutation& p) const {
  if (keys_.empty()) return false;
  Key k = pack(canonicalize(p));
  return keys_.count(k) > 0;
}

void PermutationSet::merge(const PermutationSet& other) {
  for (const Key& k : other.keys_) insert_packed(k);
}

bool PermutationSet::is_subset_of(const PermutationSet& other) const {
  for (const Key& k : keys_)
    if (other.keys_.count(k) == 0) return false;
  return true;
}

std::vector<PermutationSet::Key> PermutationSet::sorted_keys() const {
  std::vector<Key> ks(keys_.begin(), keys_.end());
  std::sort(ks.begin(), ks.end());
  return ks;
}

std::vector<Permutation> PermutationSet::sorted_members() const {
  std::vector<Permutation> out;
  out.reserve(keys_.size());
  for (const Key& k : sorted_keys()) {
    std::vector<int> m(k.begin(), k.end());
    out.emplace_back(std::move(m));
  }
  return out;
}

void PermutationSet::write_lines(std::ostream& out) const {
  for (const Key& k : sorted_keys()) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (i) out << ',';
      out << k[i];
    }
    out << '\n';
  }
}

namespace {

struct TieBlocks {
  // Node indices (1-based) grouped by tied value, blocks in ascending value
  // order and indices ascending within each block.
  std::vector<std::vector<std::uint16_t>> blocks;
};

TieBlocks tie_blocks(const Vector& x, double tol) {
  const std::size_t n = x.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return a < b;
  });

  TieBlocks tb;
  for (std::size_t t = 0; t < n; ++t) {
    if (t == 0 || x[idx[t]] - x[idx[t - 1]] > tol)
      tb.blocks.emplace_back();
    tb.blocks.back().push_back(static_cast<std::uint16_t>(idx[t] + 1));
  }
  for (auto& b : tb.blocks) std::sort(b.begin(), b.end());
  return tb;
}

std::uint64_t saturating_factorial_product(const std::vector<std::vector<std::uint16_t>>& blocks) {
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (const auto& b : blocks) {
    for (std::uint64_t f = 2; f <= b.size(); ++f) {
      if (total > cap / f) return cap;
      total *= f;
    }
  }
  return total;
}

}  // namespace

std::uint64_t tie_expand_count(const Vector& x, double tol) {
  if (x.empty()) throw BadParameter("empty vector");
  if (tol < 0.0) throw BadParameter("negative tolerance");
  return saturating_factorial_product(tie_blocks(x, tol).blocks);
}

PermutationSet tie_expand(const Vector& x, double tol, std::uint64_t cap) {
  if (x.empty()) throw BadParameter("empty vector");
  if (tol < 0.0) throw BadParameter("negative tolerance");
  if (x.size() > std::numeric_limits<std::uint16_t>::max())
    throw TooLarge("vector too long for permutation enumeration");

  TieBlocks tb = tie_blocks(x, tol);
  const std::uint64_t total = saturating_factorial_product(tb.blocks);
  if (total > cap) throw ExplosionGuard("tie expansion would generate " + std::to_string(total) +
                                        " orderings, cap is " + std::to_string(cap));

  PermutationSet out;
  PermutationSet::Key buf(x.size());
  // Odometer over the per-block permutations: emit, then advance the first
  // block that still has a next permutation, resetting the ones before it.
  for (;;) {
    std::size_t pos = 0;
    for (const auto& b : tb.blocks)
      for (std::uint16_t v : b) buf[pos++] = v;
    out.insert_packed(buf);

    std::size_t carry = 0;
    while (carry < tb.blocks.size() &&
           !std::next_permutation(tb.blocks[carry].begin(), tb.blocks[carry].end()))
      ++carry;
    if (carry == tb.blocks.size()) break;
  }
  return out;
}

double default_tie_tol(const Vector& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return 1e-8 * m;
}

PermutationSet seriate_simple(const FiedlerSpace& fs, double tol, std::uint64_t cap) {
  if (fs.multiplicity != 1)
    throw MultipleFiedler("Fiedler value has multiplicity " + std::to_string(fs.multiplicity));
  Vector x = fs.basis.col(0);
  if (tol < 0.0) tol = default_tie_tol(x);
  return tie_expand(x, tol, cap);
}

}  // namespace seriate
