#include "quiver/qip_lattice.hpp"

#include <algorithm>

#include "quiver/errors.hpp"

namespace quiver {

QipInstance::QipInstance(const DimensionVector& d)
    : d_sorted(d.sorted()), permutation(d.sorting_permutation()) {}

std::int64_t qip_objective(const QipInstance& inst, const std::vector<int>& e) {
  const auto& d = inst.d_sorted;
  if (static_cast<int>(e.size()) != inst.variables()) {
    throw InvalidInput("QIP point has " + std::to_string(e.size()) + " coordinates, expected " +
                       std::to_string(inst.variables()));
  }
  // The inner sum over j telescopes to e_1 + ... + e_i + d'_i - d'_0.
  std::int64_t total = 0, prefix = 0;
  for (int i = 1; i <= inst.variables(); ++i) {
    prefix = checked_add(prefix, e[i - 1]);
    total = checked_add(total, checked_mul(e[i - 1], prefix + d[i] - d[0]));
  }
  return total;
}

QipSolution qip_enumerate(const QipInstance& inst, std::uint64_t cap) {
  const int n = inst.variables();
  const int budget = inst.budget();
  const BigInt total = binomial(static_cast<unsigned long>(budget + n - 1), static_cast<unsigned long>(n - 1));
  if (total > BigInt(static_cast<unsigned long>(cap))) {
    throw ResourceLimit("QIP has " + to_string(total) + " feasible points, above cap " + std::to_string(cap));
  }
  QipSolution sol;
  bool have = false;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  // Lexicographically increasing compositions of budget.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      e[pos] = left;
      const auto g = qip_objective(inst, e);
      if (!have || g < sol.optimum) {
        have = true;
        sol.optimum = g;
        sol.minimizers.clear();
      }
      if (g == sol.optimum) sol.minimizers.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, budget);
  return sol;
}

int relevant_count(const DimensionVector& d) {
  if (!d.is_weakly_increasing()) throw InvalidInput("relevant count needs a weakly increasing vector");
  if (d[0] < 1) throw InvalidInput("relevant count needs d'_0 >= 1");
  int m = 1;
  long prefix = d[0];
  for (int l = 1; l <= d.arrows(); ++l) {
    prefix += d[l];
    if (prefix >= static_cast<long>(l) * d[l]) m = l;
  }
  return m;
}

ClosestPointResult closest_simplex_points(const DimensionVector& d) {
  ClosestPointResult res;
  const int m = relevant_count(d);
  res.m_relevant = m;
  res.S = 0;
  for (int i = 0; i <= m; ++i) res.S += d[i];
  const Rational mean = ratio(res.S, m);
  for (int i = 1; i <= m; ++i) {
    res.s_hat.emplace_back(d[0] - d[i]);
    res.p_hat.push_back(mean - d[i]);
    res.rounded.push_back(round_half_up(res.p_hat.back()));
  }
  res.delta = res.S - BigInt(m) * round_half_up(mean);
  res.epsilon = sgn(res.delta);
  const int k = static_cast<int>(BigInt(abs(res.delta)).get_si());
  if (k > m) throw std::logic_error("rounding defect exceeds the number of coordinates");

  // Every p_hat_i has the same fractional part, so all |delta|-subsets tie.
  std::vector<int> pick(static_cast<std::size_t>(m), 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  do {
    auto v = res.rounded;
    for (int i = 0; i < m; ++i) v[i] += pick[i] * res.epsilon;
    res.v_hats.push_back(std::move(v));
  } while (std::prev_permutation(pick.begin(), pick.end()));

  res.D_hat = 0;
  for (int i = 0; i < m; ++i) {
    const BigInt diff = res.s_hat[i] - res.v_hats.front()[i];
    res.D_hat += diff * diff;
  }
  res.D = res.D_hat;
  for (int i = m + 1; i <= d.arrows(); ++i) res.D += BigInt(d[i] - d[0]) * (d[i] - d[0]);
  BigInt twice = res.D_hat + BigInt(d[0]) * d[0];
  for (int i = 1; i <= m; ++i) twice -= BigInt(d[i] - d[0]) * (d[i] - d[0]);
  if (twice % 2 != 0) throw std::logic_error("odd value for twice the QIP optimum");
  res.G_opt = twice / 2;
  return res;
}

namespace {

struct Reduced {
  DimensionVector d;  // sorted d - r
  bool degenerate;    // min entry is zero
};

Reduced reduce(const DimensionVector& d, int r) {
  require_rank_in_range(d, r);
  auto red = d.sorted().shifted(-r);
  const bool degenerate = red[0] == 0;
  return {std::move(red), degenerate};
}

}  // namespace

BigInt codim_closed_form(const DimensionVector& d, int r) {
  const auto red = reduce(d, r);
  if (red.degenerate) return 0;
  const auto& e = red.d;
  const int m = relevant_count(e);
  BigInt s_tilde = 0;
  for (int i = 0; i <= m; ++i) s_tilde += e[i];
  const Rational x = ratio(s_tilde, m);
  const Rational f = frac(x);
  Rational c = ratio(m, 2) * f * (1 - f) - ratio(BigInt(m) * (m - 1), 2) * x * x;
  for (int i = 0; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) c += BigInt(e[i]) * e[j];
  }
  c.canonicalize();
  if (c.get_den() != 1) throw std::logic_error("closed-form codimension is not an integer: " + to_string(c));
  return c.get_num();
}

BigInt theta_closed_form(const DimensionVector& d, int r) {
  const auto red = reduce(d, r);
  if (red.degenerate) return 1;
  const int m = relevant_count(red.d);
  BigInt s_tilde = 0;
  for (int i = 0; i <= m; ++i) s_tilde += red.d[i];
  const BigInt delta = s_tilde - BigInt(m) * round_half_up(ratio(s_tilde, m));
  return binomial(static_cast<unsigned long>(m), BigInt(abs(delta)).get_ui());
}

}  // namespace quiver
