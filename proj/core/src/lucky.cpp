#include <bit>
#include <cstdint>
#include <vector>

#include "seqstate/error.hpp"
#include "seqstate/sieves.hpp"

namespace seqstate::sieves {
namespace {

// Fenwick tree over alive flags supporting rank -> position lookup.
class OrderStatisticTree {
 public:
  explicit OrderStatisticTree(std::size_t size) : tree_(size + 1, 0), size_(size) {
    // Linear-time build with every slot alive.
    for (std::size_t i = 1; i <= size_; ++i) {
      tree_[i] += 1;
      const std::size_t parent = i + (i & (~i + 1));
      if (parent <= size_) tree_[parent] += tree_[i];
    }
    alive_ = size_;
    top_bit_ = size_ ? std::bit_floor(size_) : 0;
  }

  std::size_t alive() const noexcept { return alive_; }

  /// 0-based position of the element with 0-based rank `rank`.
  std::size_t select(std::size_t rank) const noexcept {
    std::size_t pos = 0;
    std::size_t remaining = rank + 1;
    for (std::size_t step = top_bit_; step; step >>= 1) {
      const std::size_t next = pos + step;
      if (next <= size_ && tree_[next] < remaining) {
        pos = next;
        remaining -= tree_[next];
      }
    }
    return pos;  // 1-based index pos + 1 -> 0-based pos
  }

  void erase(std::size_t position) noexcept {
    for (std::size_t i = position + 1; i <= size_; i += i & (~i + 1)) --tree_[i];
    --alive_;
  }

 private:
  std::vector<std::uint32_t> tree_;
  std::size_t size_;
  std::size_t alive_ = 0;
  std::size_t top_bit_ = 0;
};

}  // namespace

std::vector<std::uint32_t> lucky_upto(std::uint64_t limit) {
  if (limit > 0xFFFFFFFFull) throw RangeError("lucky sieve limit exceeds 2^32 - 1");
  std::vector<std::uint32_t> out;
  if (limit < 1) return out;

  // Slot i holds the odd number 2i + 1; the first pass (every second number)
  // is implicit.
  const std::size_t slots = static_cast<std::size_t>((limit + 1) / 2);
  OrderStatisticTree tree(slots);
  std::vector<std::uint8_t> alive(slots, 1);

  for (std::size_t rank = 1; rank < tree.alive(); ++rank) {
    const std::size_t step = 2 * tree.select(rank) + 1;
    if (step > tree.alive()) break;
    // Delete every step-th survivor, highest rank first so lower ranks hold.
    for (std::size_t victim = (tree.alive() / step) * step; victim >= step; victim -= step) {
      const std::size_t pos = tree.select(victim - 1);
      tree.erase(pos);
      alive[pos] = 0;
    }
  }

  out.reserve(tree.alive());
  for (std::size_t i = 0; i < slots; ++i) {
    if (alive[i]) out.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  return out;
}

}  // namespace seqstate::sieves
