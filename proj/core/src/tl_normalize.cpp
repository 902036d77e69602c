#include <algorithm>
#include <set>

#include "polecat/error.hpp"
#include "polecat/tl.hpp"

namespace polecat {

Matching::Matching(int source, int target, std::vector<Pair> pairs)
    : source_(source), target_(target), pairs_(std::move(pairs)) {
  const int points = source + target;
  if (source < 0 || target < 0 || points % 2 != 0)
    throw StructuralError("a matching needs an even number of boundary points");
  if (static_cast<int>(pairs_.size()) * 2 != points)
    throw StructuralError("matching is not perfect");
  std::vector<bool> seen(static_cast<std::size_t>(points), false);
  for (auto& [a, b] : pairs_) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= points || a == b || seen[static_cast<std::size_t>(a)] ||
        seen[static_cast<std::size_t>(b)])
      throw StructuralError("matching pairs do not partition the boundary");
    seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

Matching Matching::identity(int n) {
  std::vector<Pair> pairs;
  for (int k = 0; k < n; ++k) pairs.emplace_back(k, n + k);
  return Matching(n, n, std::move(pairs));
}

bool Matching::is_planar() const {
  // Walk the boundary counterclockwise: bottom left to right, then top
  // right to left.
  auto position = [this](int point) {
    return point < source_ ? point : source_ + (target_ - 1 - (point - source_));
  };
  std::vector<Pair> chords;
  for (auto [a, b] : pairs_) {
    int p = position(a), q = position(b);
    chords.emplace_back(std::min(p, q), std::max(p, q));
  }
  for (std::size_t x = 0; x < chords.size(); ++x)
    for (std::size_t y = 0; y < chords.size(); ++y) {
      auto [p1, q1] = chords[x];
      auto [p2, q2] = chords[y];
      if (p1 < p2 && p2 < q1 && q1 < q2) return false;
    }
  return true;
}

namespace {

std::vector<int> partner_table(const Matching& m) {
  std::vector<int> partner(static_cast<std::size_t>(m.source() + m.target()));
  for (auto [a, b] : m.pairs()) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  return partner;
}

}  // namespace

std::pair<Matching, int> compose(const Matching& bottom, const Matching& top) {
  if (bottom.target() != top.source())
    throw StructuralError("composing matchings with mismatched grades");
  const int n = bottom.source();
  const int k = bottom.target();
  const int m = top.target();
  const auto pb = partner_table(bottom);
  const auto pt = partner_table(top);
  std::vector<bool> middle_seen(static_cast<std::size_t>(k), false);

  // Follows a strand that enters the bottom diagram at bottom-index x (or
  // the top diagram at top-index x) until it reaches an outer point.
  // Returns the outer point in result numbering.
  auto follow = [&](bool in_bottom, int x) {
    for (;;) {
      if (in_bottom) {
        const int y = pb[static_cast<std::size_t>(x)];
        if (y < n) return y;
        const int mid = y - n;
        middle_seen[static_cast<std::size_t>(mid)] = true;
        in_bottom = false;
        x = mid;
      } else {
        const int y = pt[static_cast<std::size_t>(x)];
        if (y >= k) return n + (y - k);
        middle_seen[static_cast<std::size_t>(y)] = true;
        in_bottom = true;
        x = n + y;
      }
    }
  };

  std::vector<Matching::Pair> pairs;
  std::vector<bool> outer_seen(static_cast<std::size_t>(n + m), false);
  for (int p = 0; p < n + m; ++p) {
    if (outer_seen[static_cast<std::size_t>(p)]) continue;
    const int other = p < n ? follow(true, p) : follow(false, k + (p - n));
    outer_seen[static_cast<std::size_t>(p)] = outer_seen[static_cast<std::size_t>(other)] = true;
    pairs.emplace_back(p, other);
  }

  int loops = 0;
  for (int mid = 0; mid < k; ++mid) {
    if (middle_seen[static_cast<std::size_t>(mid)]) continue;
    ++loops;
    int x = mid;
    do {
      middle_seen[static_cast<std::size_t>(x)] = true;
      const int across = pt[static_cast<std::size_t>(x)];  // stays in the middle
      middle_seen[static_cast<std::size_t>(across)] = true;
      x = pb[static_cast<std::size_t>(n + across)] - n;
    } while (x != mid);
  }
  return {Matching(n, m, std::move(pairs)), loops};
}

Matching tensor(const Matching& left, const Matching& right) {
  const int n1 = left.source(), m1 = left.target();
  const int n2 = right.source(), m2 = right.target();
  auto map_left = [&](int x) { return x < n1 ? x : n1 + n2 + (x - n1); };
  auto map_right = [&](int x) { return x < n2 ? n1 + x : n1 + n2 + m1 + (x - n2); };
  std::vector<Matching::Pair> pairs;
  for (auto [a, b] : left.pairs()) pairs.emplace_back(map_left(a), map_left(b));
  for (auto [a, b] : right.pairs()) pairs.emplace_back(map_right(a), map_right(b));
  return Matching(n1 + n2, m1 + m2, std::move(pairs));
}

namespace {

void accumulate(MatchingSum& into, const Matching& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) into.erase(it);
}

MatchingSum crossing_sum(bool positive) {
  const Scalar a = Scalar::sqrt_minus_q();
  const Scalar a_inv = a.inverse();
  const Matching cupcap(2, 2, {{0, 1}, {2, 3}});
  MatchingSum out;
  accumulate(out, Matching::identity(2), positive ? a : a_inv);
  accumulate(out, cupcap, positive ? a_inv : a);
  return out;
}

MatchingSum normalize(const TLTerm& term) {
  switch (term.kind()) {
    case TLTerm::Kind::identity:
      return {{Matching::identity(term.width()), Scalar(1)}};
    case TLTerm::Kind::cup:
      return {{Matching(0, 2, {{0, 1}}), Scalar(1)}};
    case TLTerm::Kind::cap:
      return {{Matching(2, 0, {{0, 1}}), Scalar(1)}};
    case TLTerm::Kind::cross_pos:
      return crossing_sum(true);
    case TLTerm::Kind::cross_neg:
      return crossing_sum(false);
    case TLTerm::Kind::stub:
      throw PreconditionError("kauffman_normalize: diagram has univalent vertices");
    case TLTerm::Kind::tensor: {
      const MatchingSum a = normalize(term.first());
      const MatchingSum b = normalize(term.second());
      MatchingSum out;
      for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) accumulate(out, tensor(ma, mb), ca * cb);
      return out;
    }
    case TLTerm::Kind::stack: {
      const MatchingSum a = normalize(term.first());
      const MatchingSum b = normalize(term.second());
      const Scalar loop = Scalar::loop_value();
      MatchingSum out;
      for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
          auto [m, loops] = compose(ma, mb);
          accumulate(out, m, ca * cb * loop.pow(loops));
        }
      return out;
    }
    case TLTerm::Kind::scale: {
      MatchingSum out;
      for (const auto& [m, c] : normalize(term.first())) accumulate(out, m, term.factor() * c);
      return out;
    }
    case TLTerm::Kind::sum: {
      MatchingSum out = normalize(term.first());
      for (const auto& [m, c] : normalize(term.second())) accumulate(out, m, c);
      return out;
    }
  }
  return {};
}

}  // namespace

MatchingSum kauffman_normalize(const TLTerm& term) {
  if (term.has_stubs())
    throw PreconditionError("kauffman_normalize: diagram has univalent vertices");
  return normalize(term);
}

bool tl_equal(const TLTerm& a, const TLTerm& b) {
  if (a.source() != b.source() || a.target() != b.target())
    throw StructuralError("tl_equal: grades differ");
  return kauffman_normalize(a) == kauffman_normalize(b);
}

std::string to_string(const MatchingSum& sum) {
  if (sum.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : sum) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ") * [" + std::to_string(m.source()) + "->" +
           std::to_string(m.target()) + ":";
    for (auto [a, b] : m.pairs()) out += " " + std::to_string(a) + "-" + std::to_string(b);
    out += "]";
  }
  return out;
}

}  // namespace polecat
