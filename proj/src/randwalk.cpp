#include "szegolab/randwalk.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "szegolab/combinatorics.hpp"
#include "szegolab/omega.hpp"

namespace szegolab::rwalk {

namespace {

using Law = std::map<double, double>;

Law law_of(const StepDist& dist) {
  Law law;
  for (std::size_t i = 0; i < dist.support.size(); ++i) law[dist.support[i]] += dist.probs[i];
  return law;
}

Law convolve(const Law& a, const Law& b) {
  Law out;
  for (const auto& [x, px] : a)
    for (const auto& [y, py] : b) out[x + y] += px * py;
  return out;
}

}  // namespace

void StepDist::validate() const {
  if (support.empty() || support.size() != probs.size())
    throw std::invalid_argument("StepDist: support/probs size mismatch");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("StepDist: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("StepDist: probabilities must sum to 1");
}

std::string StepDist::to_json() const {
  nlohmann::json j;
  j["support"] = support;
  j["probs"] = probs;
  return j.dump();
}

StepDist StepDist::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  StepDist d;
  d.support = j.at("support").get<std::vector<double>>();
  d.probs = j.at("probs").get<std::vector<double>>();
  d.validate();
  return d;
}

Cplx enumerate_lhs(const StepDist& dist, int p, int q, double alpha, double beta,
                   long budget) {
  dist.validate();
  if (p < 1 || q < 1) throw std::invalid_argument("enumerate_lhs: need p, q >= 1");
  const int n = p + q;
  const int s = static_cast<int>(dist.support.size());
  double paths = 1.0;
  for (int i = 0; i < n; ++i) paths *= s;
  if (paths > static_cast<double>(budget))
    throw std::invalid_argument("enumerate_lhs: path budget exceeded");

  std::vector<int> idx(n, 0);
  Cplx total{0.0, 0.0};
  while (true) {
    double prob = 1.0, run = 0.0, sp = 0.0, tmax = 0.0;
    for (int i = 0; i < n; ++i) {
      prob *= dist.probs[idx[i]];
      run += dist.support[idx[i]];
      if (i + 1 == p) sp = run;
      tmax = std::max(tmax, run);
    }
    total += prob * std::exp(Cplx{0.0, alpha * sp + beta * tmax});
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == s - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return total;
}

Cplx formula_rhs_coeff(const StepDist& dist, int p, int q, double alpha, double beta,
                       long budget) {
  dist.validate();
  if (p < 1 || q < 1) throw std::invalid_argument("formula_rhs_coeff: need p, q >= 1");
  const Law base = law_of(dist);

  // Block laws dist^{*part} for every part size that can occur.
  std::vector<Law> pow_law(std::max(p, q) + 1);
  pow_law[1] = base;
  for (int n = 2; n <= std::max(p, q); ++n) pow_law[n] = convolve(pow_law[n - 1], base);

  Cplx total{0.0, 0.0};
  for (int j = 1; j <= p; ++j) {
    const auto comps_p = comb::compositions(p, j);
    for (int k = 1; k <= q; ++k) {
      const auto comps_q = comb::compositions(q, k);
      const double fact = comb::factorial(j) * comb::factorial(k);
      for (const auto& cp : comps_p)
        for (const auto& cq : comps_q) {
          double weight = 1.0 / fact;
          for (int part : cp) weight /= part;
          for (int part : cq) weight /= part;

          // Odometer over the joint support of the j + k independent blocks.
          std::vector<const Law*> laws;
          laws.reserve(j + k);
          double joint = 1.0;
          for (int part : cp) laws.push_back(&pow_law[part]);
          for (int part : cq) laws.push_back(&pow_law[part]);
          for (const Law* law : laws) joint *= static_cast<double>(law->size());
          if (joint > static_cast<double>(budget))
            throw std::invalid_argument("formula_rhs_coeff: block budget exceeded");

          std::vector<Law::const_iterator> it;
          it.reserve(laws.size());
          for (const Law* law : laws) it.push_back(law->begin());
          std::vector<double> y(j), z(k);
          Cplx block_sum{0.0, 0.0};
          while (true) {
            double prob = 1.0, ysum = 0.0;
            for (int i = 0; i < j + k; ++i) {
              prob *= it[i]->second;
              if (i < j) {
                y[i] = it[i]->first;
                ysum += y[i];
              } else {
                z[i - j] = it[i]->first;
              }
            }
            const double om = omega::omega_rw(y, z);
            block_sum += prob * std::exp(Cplx{0.0, alpha * ysum + beta * om});
            int pos = j + k - 1;
            while (pos >= 0 && std::next(it[pos]) == laws[pos]->end()) {
              it[pos] = laws[pos]->begin();
              --pos;
            }
            if (pos < 0) break;
            ++it[pos];
          }
          total += weight * block_sum;
        }
    }
  }
  return total;
}

}  // namespace szegolab::rwalk
