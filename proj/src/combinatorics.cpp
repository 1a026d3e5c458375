#include "szegolab/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace szegolab::comb {
namespace {

double extremum0(double a, double b, Extremum mode) {
  return mode == Extremum::Min ? std::min(a, b) : std::max(a, b);
}

// min(0,x) in Min mode, max(0,x) in Max mode.
double clip0(double x, Extremum mode) { return extremum0(0.0, x, mode); }

void check_size(const Vec& v) {
  if (v.empty()) throw std::invalid_argument("empty input vector");
  if (static_cast<int>(v.size()) > kMaxPermutationSize)
    throw std::invalid_argument("vector too long for exhaustive S_m enumeration");
}

// Runs fn(perm) for every permutation of {0,...,m-1}.
void for_each_permutation(int m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    fn(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

// Block sums of the permuted vector under a composition k of m.
std::vector<double> permuted_block_sums(const Vec& v, const std::vector<int>& perm,
                                        const Composition& k) {
  std::vector<double> out;
  out.reserve(k.size());
  int pos = 0;
  for (int part : k) {
    double s = 0.0;
    for (int i = 0; i < part; ++i) s += v[perm[pos + i]];
    pos += part;
    out.push_back(s);
  }
  return out;
}

}  // namespace

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

double multinomial(int n, const Composition& parts) {
  double r = factorial(n);
  for (int p : parts) r /= factorial(p);
  return r;
}

std::vector<Composition> compositions(int m, int j) {
  std::vector<Composition> out;
  if (j <= 0 || j > m) return out;
  Composition cur(j, 1);
  // Enumerate by distributing the surplus m - j over j slots recursively.
  std::function<void(int, int)> rec = [&](int slot, int remaining) {
    if (slot == j - 1) {
      cur[slot] = remaining;
      out.push_back(cur);
      return;
    }
    for (int take = 1; take <= remaining - (j - 1 - slot); ++take) {
      cur[slot] = take;
      rec(slot + 1, remaining - take);
    }
  };
  rec(0, m);
  return out;
}

std::vector<Composition> all_compositions(int m) {
  std::vector<Composition> out;
  for (int j = 1; j <= m; ++j) {
    auto cj = compositions(m, j);
    out.insert(out.end(), cj.begin(), cj.end());
  }
  return out;
}

std::vector<double> block_sums(const Vec& v, const Composition& c,
                               const std::vector<int>& perm) {
  int total = 0;
  for (int part : c) {
    if (part < 1) throw std::invalid_argument("block_sums: parts must be positive");
    total += part;
  }
  if (total != static_cast<int>(v.size()) || perm.size() != v.size())
    throw std::invalid_argument("block_sums: composition/permutation length mismatch");
  return permuted_block_sums(v, perm, c);
}

double running_extremum(const Vec& v, Extremum mode) {
  double best = 0.0, s = 0.0;
  for (double x : v) {
    s += x;
    best = extremum0(best, s, mode);
  }
  return best;
}

double ghd_lhs(const Vec& v, int n, Extremum mode) {
  check_size(v);
  const int m = static_cast<int>(v.size());
  double total = 0.0;
  for_each_permutation(m, [&](const std::vector<int>& perm) {
    double full = 0.0, head = 0.0, s = 0.0;
    for (int i = 0; i < m; ++i) {
      s += v[perm[i]];
      full = extremum0(full, s, mode);
      if (i < m - 1) head = extremum0(head, s, mode);
    }
    total += std::pow(full, n) - std::pow(head, n);
  });
  return total;
}

double ghd_rhs(const Vec& v, int n, Extremum mode) {
  check_size(v);
  const int m = static_cast<int>(v.size());
  const int jmax = std::min(m, n);
  // Precompute composition lists once per (m, n).
  std::vector<std::vector<Composition>> k_of(jmax + 1), l_of(jmax + 1);
  for (int j = 1; j <= jmax; ++j) {
    k_of[j] = compositions(m, j);
    l_of[j] = compositions(n, j);
  }
  double total = 0.0;
  for_each_permutation(m, [&](const std::vector<int>& perm) {
    for (int j = 1; j <= jmax; ++j) {
      const double inv_jfact = 1.0 / factorial(j);
      for (const auto& k : k_of[j]) {
        const auto blocks = permuted_block_sums(v, perm, k);
        for (const auto& l : l_of[j]) {
          double term = multinomial(n, l);
          for (int i = 0; i < j; ++i)
            term *= std::pow(clip0(blocks[i], mode), l[i]) / k[i];
          total += inv_jfact * term;
        }
      }
    }
  });
  return total;
}

double hd_classic_rhs(const Vec& v, Extremum mode) {
  check_size(v);
  const int m = static_cast<int>(v.size());
  const double s = std::accumulate(v.begin(), v.end(), 0.0);
  return factorial(m - 1) * clip0(s, mode);
}

double hd_cyclic_lhs(const Vec& v, Extremum mode) {
  check_size(v);
  const int m = static_cast<int>(v.size());
  double total = 0.0;
  for (int shift = 0; shift < m; ++shift) {
    double full = 0.0, head = 0.0, s = 0.0;
    for (int i = 0; i < m; ++i) {
      s += v[(shift + i) % m];
      full = extremum0(full, s, mode);
      if (i < m - 1) head = extremum0(head, s, mode);
    }
    total += full - head;
  }
  return total;
}

CfSides cf_bst_both_sides(const Vec& v, const std::function<double(double)>& f,
                          Extremum mode) {
  check_size(v);
  const int m = static_cast<int>(v.size());
  std::vector<std::vector<Composition>> k_of(m + 1);
  for (int j = 1; j <= m; ++j) k_of[j] = compositions(m, j);

  CfSides sides;
  for_each_permutation(m, [&](const std::vector<int>& perm) {
    // Left: f of the running extremum of the permuted walk.
    double best = 0.0, s = 0.0;
    for (int i = 0; i < m; ++i) {
      s += v[perm[i]];
      best = extremum0(best, s, mode);
    }
    sides.lhs += f(best);
    // Right: cycle average over compositions with harmonic weights.
    for (int j = 1; j <= m; ++j) {
      const double inv_jfact = 1.0 / factorial(j);
      for (const auto& k : k_of[j]) {
        const auto blocks = permuted_block_sums(v, perm, k);
        double arg = 0.0, weight = 1.0;
        for (int i = 0; i < j; ++i) {
          arg += clip0(blocks[i], mode);
          weight /= k[i];
        }
        sides.rhs += inv_jfact * weight * f(arg);
      }
    }
  });
  return sides;
}

}  // namespace szegolab::comb
