#include <vector>

#include "polecat/error.hpp"
#include "polecat/rng.hpp"
#include "polecat/tl.hpp"

namespace polecat {

namespace {

// One layer acting on `width` strands: `piece` placed after `offset`
// straight strands.
TLTerm layer(const TLTerm& piece, int offset, int width) {
  TLTerm out = piece;
  if (offset > 0) out = TLTerm::tensor(TLTerm::id(offset), out);
  const int rest = width - offset - piece.source();
  if (rest > 0) out = TLTerm::tensor(out, TLTerm::id(rest));
  return out;
}

}  // namespace

TLTerm tl_random(int n, int m, int crossings, std::uint64_t seed) {
  if (n < 0 || m < 0 || crossings < 0) throw PreconditionError("tl_random: negative argument");
  if ((n + m) % 2 != 0) throw PreconditionError("tl_random: n + m must be even");

  Rng rng(seed, "tl_random", 0);
  enum Op { kCross, kCup, kCap };
  std::vector<Op> ops;
  ops.insert(ops.end(), static_cast<std::size_t>(crossings), kCross);
  if (m > n) ops.insert(ops.end(), static_cast<std::size_t>((m - n) / 2), kCup);
  if (n > m) ops.insert(ops.end(), static_cast<std::size_t>((n - m) / 2), kCap);
  for (std::size_t k = ops.size(); k > 1; --k) std::swap(ops[k - 1], ops[rng.below(k)]);

  TLTerm term = TLTerm::id(n);
  int width = n;
  std::size_t pending_caps = 0;
  auto apply = [&](const TLTerm& piece) {
    const int offset = rng.range(0, width - piece.source());
    term = TLTerm::stack(term, layer(piece, offset, width));
    width += piece.target() - piece.source();
  };
  for (Op op : ops) {
    if (op != kCup && width < 2) {
      // Not enough strands: open a cup now and close it again at the end.
      apply(TLTerm::cup());
      ++pending_caps;
    }
    switch (op) {
      case kCross:
        apply(rng.coin() ? TLTerm::cross_pos() : TLTerm::cross_neg());
        break;
      case kCup:
        apply(TLTerm::cup());
        break;
      case kCap:
        apply(TLTerm::cap());
        break;
    }
  }
  for (; pending_caps > 0; --pending_caps) apply(TLTerm::cap());
  return term;
}

}  // namespace polecat
