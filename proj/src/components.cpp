#include "quiver/components.hpp"

#include <map>
#include <sstream>

#include "quiver/errors.hpp"
#include "quiver/qip_lattice.hpp"
#include "quiver/qseries.hpp"

namespace quiver {

int default_truncation(const DimensionVector& d, int r) {
  const BigInt c = codim_closed_form(d, r);
  if (c > 100000) throw ResourceLimit("closed-form codimension " + to_string(c) + " is too large for a series");
  return static_cast<int>(c.get_si()) + 4;
}

namespace {

ComponentReport via_qseries(const DimensionVector& d, int r, const MethodOptions& opts) {
  // C <= rep_dim(d) always, since Sigma^r_d is nonempty.
  const std::int64_t ceiling = rep_dim(d);
  std::int64_t t = opts.truncation ? *opts.truncation : default_truncation(d, r);
  while (true) {
    try {
      auto [c, theta] = extract_C_theta(q_series_closed(d, r, static_cast<int>(t)));
      return {Method::QSeries, c, theta, {}};
    } catch (const NotFound&) {
      if (t >= ceiling || opts.truncation) throw;
      t = std::min(ceiling, 2 * t + 1);
    }
  }
}

}  // namespace

ComponentReport compute_components(const DimensionVector& d, int r, Method method, const MethodOptions& opts) {
  require_rank_in_range(d, r);
  switch (method) {
    case Method::Brute: {
      auto b = top_components_bruteforce(d, r, opts.cap);
      return {Method::Brute, b.codim, b.count, std::move(b.witnesses)};
    }
    case Method::QSeries:
      return via_qseries(d, r, opts);
    case Method::Qip: {
      auto sol = qip_enumerate(QipInstance(d.shifted(-r)), opts.cap);
      return {Method::Qip, sol.optimum, static_cast<unsigned long>(sol.count()), {}};
    }
    case Method::Closed:
      return {Method::Closed, codim_closed_form(d, r), theta_closed_form(d, r), {}};
    case Method::Ideal: {
      const int n_max = opts.max_degree ? *opts.max_degree : static_cast<int>(codim_closed_form(d, r).get_si());
      auto low = lowest_kernel(d, r, n_max, opts.basis_cap);
      return {Method::Ideal, low.degree, low.rank, {}};
    }
  }
  throw InvalidInput("unknown method");
}

// ---------------------------------------------------------------------------

namespace {

// Sums over u <= j instead of u <= j + 1 in the Ext condition.
std::int64_t codim_off_by_one(const KostantPartition& m) {
  std::int64_t total = 0;
  const int n = m.vertices();
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int u = a + 1; u <= b && u < n; ++u)
        for (int v = b + 1; v < n; ++v) total += std::int64_t(m.at(a, b)) * m.at(u, v);
  return total;
}

std::string describe(const DimensionVector& d, int r, const char* what, const BigInt& c1, const BigInt& t1,
                     const char* other, const BigInt& c2, const BigInt& t2) {
  std::ostringstream os;
  os << "d=" << d.to_string() << " r=" << r << ": " << what << " (C=" << c1 << ", theta=" << t1 << ") vs " << other
     << " (C=" << c2 << ", theta=" << t2 << ")";
  return os.str();
}

}  // namespace

SelfcheckReport selfcheck(const SelfcheckOptions& opts) {
  SelfcheckReport rep;
  const CodimFn codim = opts.inject_fault ? &codim_off_by_one : &orbit_codim;
  std::map<std::pair<std::vector<int>, int>, std::pair<BigInt, BigInt>> brute;
  std::vector<int> e;
  auto fail = [&](std::string msg) {
    rep.passed = false;
    rep.counterexample = std::move(msg);
  };
  auto rec = [&](auto&& self, int left) -> void {
    if (!rep.passed) return;
    if (e.size() >= 2) {
      DimensionVector d(e);
      ++rep.vectors;
      for (int r = 0; r <= d.min() && rep.passed; ++r) {
        ++rep.cases;
        const auto b = top_components_bruteforce(d, r, opts.cap, codim);
        const BigInt bc = b.codim, bt = b.count;
        brute[{e, r}] = {bc, bt};
        const auto closed = compute_components(d, r, Method::Closed);
        const auto series = compute_components(d, r, Method::QSeries);
        const auto qip = compute_components(d, r, Method::Qip);
        for (const auto* other : {&closed, &series, &qip}) {
          if (other->C != bc || other->theta != bt) {
            fail(describe(d, r, "brute", bc, bt, method_name(other->method).c_str(), other->C, other->theta));
            return;
          }
        }
        // The walk is lexicographic, so the sorted rearrangement came first.
        const auto sorted = d.sorted();
        auto it = brute.find({sorted.entries(), r});
        if (it != brute.end() && it->second != std::make_pair(bc, bt)) {
          fail(describe(d, r, "brute", bc, bt, ("brute on " + sorted.to_string()).c_str(), it->second.first,
                        it->second.second));
          return;
        }
      }
    }
    for (int v = 1; v <= left; ++v) {
      e.push_back(v);
      self(self, left - v);
      e.pop_back();
    }
  };
  rec(rec, opts.bound);
  return rep;
}

}  // namespace quiver
