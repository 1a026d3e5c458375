#include "szegolab/omega.hpp"

#include <numeric>
#include <stdexcept>

namespace szegolab::omega {
namespace {

i64 sum_neg(const IVec& v) {
  i64 s = 0;
  for (i64 x : v) s += neg(x);
  return s;
}

i64 sum_pos(const IVec& v) {
  i64 s = 0;
  for (i64 x : v) s += pos(x);
  return s;
}

i64 sum(const IVec& v) { return std::accumulate(v.begin(), v.end(), i64{0}); }

void require_nonempty(const IVec& v, const char* name) {
  if (v.empty()) throw std::invalid_argument(std::string(name) + " must be nonempty");
}

// ------------------------------------------------------------------------
// Shared block-pattern recursion (second, independent transcription).
//
// Each item of a pattern is either a single distinguished jump x, entering
// with (min over its prefixes, its sum) = (neg(x), x), or a reduced block
// (mu_1..mu_j), entering with (sum_i neg(mu_i), sum_i mu_i).  The value of a
// pattern is the running minimum of the assembled walk, accumulated by
//   value([it, rest]) = M(it) + neg( S(it) - M(it) + value(rest) ),
// which is exact because M(it) <= min(0, S(it)) for both item kinds.
// ------------------------------------------------------------------------
struct PatternItem {
  i64 min_val;
  i64 sum_val;
};

PatternItem single(i64 x) { return {neg(x), x}; }
PatternItem block(const IVec& v) { return {sum_neg(v), sum(v)}; }

i64 pattern_min(const std::vector<PatternItem>& items, std::size_t from = 0) {
  if (from == items.size()) return 0;
  const PatternItem& it = items[from];
  return it.min_val + neg(it.sum_val - it.min_val + pattern_min(items, from + 1));
}

}  // namespace

i64 m2(i64 x, i64 y) { return std::min<i64>({0, x, x + y}); }

i64 min_prefix(const IVec& v) {
  i64 best = 0, s = 0;
  for (i64 x : v) {
    s += x;
    best = std::min(best, s);
  }
  return best;
}

// ---------------------------------------------------------------- literal --

i64 omega1(const OmegaArgs& a) {
  require_nonempty(a.mu, "mu");
  const i64 k1 = a.kappa1, k2 = a.kappa2;
  const i64 mn = sum_neg(a.mu), mp = sum_pos(a.mu);
  const i64 m2v = m2(k1, k2);
  const i64 piece1 = m2v + neg(k1 + k2 - m2v + mn);
  const i64 piece2 = neg(k1) + neg(pos(k1) + mn + neg(mp + k2));
  const i64 piece3 = mn + neg(mp + m2v);
  return piece1 + piece2 + piece3;
}

i64 omega2(const OmegaArgs& a) {
  require_nonempty(a.mu, "mu");
  require_nonempty(a.nu, "nu");
  const i64 k1 = a.kappa1, k2 = a.kappa2;
  const i64 mn = sum_neg(a.mu), mp = sum_pos(a.mu);
  const i64 nn = sum_neg(a.nu), np = sum_pos(a.nu);
  const i64 piece1 = neg(k1) + neg(pos(k1) + mn + neg(mp + k2 + nn));
  const i64 piece2 = mn + neg(mp + k1 + neg(k2) + neg(pos(k2) + nn));
  const i64 piece3 = mn + neg(mp + k1 + nn + neg(np + k2));
  return piece1 + piece2 + piece3;
}

i64 omega3(const OmegaArgs& a) {
  require_nonempty(a.mu, "mu");
  require_nonempty(a.nu, "nu");
  require_nonempty(a.rho, "rho");
  const i64 k1 = a.kappa1, k2 = a.kappa2;
  const i64 mn = sum_neg(a.mu), mp = sum_pos(a.mu);
  const i64 nn = sum_neg(a.nu), np = sum_pos(a.nu);
  const i64 rn = sum_neg(a.rho);
  return mn + neg(mp + k1 + nn + neg(np + k2 + rn));
}

// ---------------------------------------------------------------- resplit --

i64 omega1_resplit(const OmegaArgs& a) {
  require_nonempty(a.mu, "mu");
  const PatternItem K1 = single(a.kappa1), K2 = single(a.kappa2), Bmu = block(a.mu);
  return pattern_min({K1, K2, Bmu}) + pattern_min({K1, Bmu, K2}) +
         pattern_min({Bmu, K1, K2});
}

i64 omega2_resplit(const OmegaArgs& a) {
  require_nonempty(a.mu, "mu");
  require_nonempty(a.nu, "nu");
  const PatternItem K1 = single(a.kappa1), K2 = single(a.kappa2);
  const PatternItem Bmu = block(a.mu), Bnu = block(a.nu);
  return pattern_min({K1, Bmu, K2, Bnu}) + pattern_min({Bmu, K1, K2, Bnu}) +
         pattern_min({Bmu, K1, Bnu, K2});
}

i64 omega3_resplit(const OmegaArgs& a) {
  require_nonempty(a.mu, "mu");
  require_nonempty(a.nu, "nu");
  require_nonempty(a.rho, "rho");
  const PatternItem K1 = single(a.kappa1), K2 = single(a.kappa2);
  const PatternItem Bmu = block(a.mu), Bnu = block(a.nu), Brho = block(a.rho);
  return pattern_min({Bmu, K1, Bnu, K2, Brho});
}

// ------------------------------------------------------------ random walk --

double omega_rw(const std::vector<double>& y, const std::vector<double>& z) {
  if (y.empty() || z.empty()) throw std::invalid_argument("y and z must be nonempty");
  double ypos = 0.0, yneg = 0.0, zpos = 0.0;
  for (double v : y) {
    ypos += std::max(0.0, v);
    yneg += std::min(0.0, v);
  }
  for (double v : z) zpos += std::max(0.0, v);
  return ypos + std::max(0.0, yneg + zpos);
}

// ----------------------------------------------------------------- splits --

SplitSides split_one(const IVec& mu, int j) {
  const int p = static_cast<int>(mu.size());
  if (j < 1 || j > p - 1) throw std::invalid_argument("split point must satisfy 1 <= j <= p-1");
  const IVec head(mu.begin(), mu.begin() + j);
  const IVec tail(mu.begin() + j, mu.end());
  const i64 mj = min_prefix(head);
  SplitSides s;
  s.lhs = min_prefix(mu);
  s.rhs = mj + neg(sum(head) - mj + min_prefix(tail));
  return s;
}

SplitSides split_two(const IVec& mu, int j) {
  const int p = static_cast<int>(mu.size());
  if (j < 1 || j > p - 2) throw std::invalid_argument("split point must satisfy 1 <= j <= p-2");
  const IVec head(mu.begin(), mu.begin() + j);
  const IVec tail2(mu.begin() + j + 1, mu.end());
  const i64 mj = min_prefix(head);
  SplitSides s;
  s.lhs = min_prefix(mu);
  s.rhs = mj + neg(sum(head) - mj + mu[j] + min_prefix(tail2));
  return s;
}

}  // namespace szegolab::omega
