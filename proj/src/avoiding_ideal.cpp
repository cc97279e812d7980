#include "quiver/avoiding_ideal.hpp"

#include <algorithm>
#include <sstream>

#include "quiver/errors.hpp"
#include "quiver/modular.hpp"

namespace quiver {

namespace {

std::string vertex_letter(int vertex) {
  if (vertex < 26) return std::string(1, static_cast<char>('a' + vertex));
  return "v" + std::to_string(vertex) + "_";
}

// reachable[g][s]: generators g.. can make weighted degree s exactly.
std::vector<std::vector<char>> reachability(const std::vector<Generator>& gens, int degree) {
  const std::size_t n = gens.size();
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(static_cast<std::size_t>(degree) + 1, 0));
  reach[n][0] = 1;
  for (std::size_t g = n; g-- > 0;) {
    for (int s = 0; s <= degree; ++s) {
      for (int used = 0; used <= s && !reach[g][s]; used += gens[g].k) reach[g][s] = reach[g + 1][s - used];
    }
  }
  return reach;
}

// Visits exponent vectors of weighted degree `degree` in increasing lex order.
// `enter(g, a)` is called before descending with exponent a at position g.
template <class Enter, class Leaf>
void walk_monomials(const std::vector<Generator>& gens, int degree, Enter&& enter, Leaf&& leaf) {
  const auto reach = reachability(gens, degree);
  if (!reach[0][degree]) return;
  std::vector<int> e(gens.size(), 0);
  auto rec = [&](auto&& self, std::size_t g, int rem) -> void {
    if (g == gens.size()) {
      leaf(e);
      return;
    }
    for (int a = 0; a * gens[g].k <= rem; ++a) {
      // enter() sees every a in order, so it can extend products incrementally.
      enter(g, a);
      if (!reach[g + 1][rem - a * gens[g].k]) continue;
      e[g] = a;
      self(self, g + 1, rem - a * gens[g].k);
    }
    e[g] = 0;
  };
  rec(rec, 0, degree);
}

RawPolynomial multiply(const RawPolynomial& a, const RawPolynomial& b) {
  RawPolynomial out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      auto k = ka;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
      auto& slot = out[k];
      slot += ca * cb;
      if (slot == 0) out.erase(k);
    }
  }
  return out;
}

int weighted_degree(const std::vector<Generator>& gens, const std::vector<int>& e) {
  int s = 0;
  for (std::size_t g = 0; g < gens.size(); ++g) s += e[g] * gens[g].k;
  return s;
}

// Sparse polynomial with monomials packed in mixed radix, sorted by code.
using Packed = std::vector<std::pair<std::uint64_t, std::int64_t>>;

Packed multiply(const Packed& p, const Packed& q) {
  Packed out;
  out.reserve(p.size() * q.size());
  for (const auto& [kq, cq] : q) {
    for (const auto& [kp, cp] : p) out.emplace_back(kp + kq, checked_mul(cp, cq));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < out.size();) {
    std::size_t j = i;
    std::int64_t c = 0;
    while (j < out.size() && out[j].first == out[i].first) c = checked_add(c, out[j++].second);
    if (c != 0) out[w++] = {out[i].first, c};
    i = j;
  }
  out.resize(w);
  return out;
}

// Columns of phi_r in the coordinates E_t = e_t(y_1..y_{r+1}) and
// F_{i,s} = e_s(x_{i,r+2}, ..., x_{i,d_i}). These are algebraically
// independent, and e_k of vertex i maps to sum_t E_t F_{i,k-t}.
std::vector<Packed> reduced_columns(const DimensionVector& d, int r, const std::vector<Generator>& gens, int degree) {
  std::vector<int> weight;
  for (int t = 1; t <= r + 1; ++t) weight.push_back(t);
  std::vector<std::size_t> first_f;
  for (std::size_t i = 0; i < d.size(); ++i) {
    first_f.push_back(weight.size());
    for (int s = 1; s <= d[i] - r - 1; ++s) weight.push_back(s);
  }
  std::vector<std::uint64_t> place(weight.size());
  std::uint64_t span = 1;
  for (std::size_t v = 0; v < weight.size(); ++v) {
    place[v] = span;
    if (__builtin_mul_overflow(span, static_cast<std::uint64_t>(degree / weight[v] + 1), &span)) {
      throw ResourceLimit("reduced monomial space does not fit 64-bit codes");
    }
  }
  std::vector<Packed> images;
  for (const auto& g : gens) {
    Packed img;
    const int rest = d[g.vertex] - r - 1;
    for (int t = std::max(0, g.k - rest); t <= std::min(g.k, r + 1); ++t) {
      std::uint64_t code = 0;
      if (t > 0) code += place[static_cast<std::size_t>(t - 1)];
      if (g.k - t > 0) code += place[first_f[g.vertex] + static_cast<std::size_t>(g.k - t - 1)];
      img.emplace_back(code, 1);
    }
    std::sort(img.begin(), img.end());
    images.push_back(std::move(img));
  }

  std::vector<Packed> columns;
  // partial[g] is the product over generators before g.
  std::vector<Packed> partial(gens.size() + 1);
  partial[0] = {{0, 1}};
  walk_monomials(
      gens, degree,
      [&](std::size_t g, int a) {
        partial[g + 1] = a == 0 ? partial[g] : multiply(partial[g + 1], images[g]);
      },
      [&](const std::vector<int>&) { columns.push_back(partial[gens.size()]); });
  return columns;
}

std::vector<SparseIntColumn> index_rows(std::vector<Packed> packed, std::size_t& rows, std::uint64_t cap) {
  std::vector<std::uint64_t> keys;
  for (const auto& c : packed) {
    for (const auto& t : c) keys.push_back(t.first);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  if (keys.size() > cap) {
    throw ResourceLimit("target basis has " + std::to_string(keys.size()) + " monomials, above cap " +
                        std::to_string(cap));
  }
  rows = keys.size();
  std::vector<SparseIntColumn> out;
  for (auto& c : packed) {
    SparseIntColumn col;
    for (const auto& [k, v] : c) {
      col.emplace_back(static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin()), v);
    }
    out.push_back(std::move(col));
    Packed().swap(c);
  }
  return out;
}

void check_dense_size(std::size_t rows, std::size_t cols) {
  if (static_cast<double>(rows) * static_cast<double>(cols) > 4e8) {
    throw ResourceLimit("kernel matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " is too large");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Generator> GradedBasis::generators_of(const DimensionVector& d) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int k = 1; k <= d[i]; ++k) gens.push_back({static_cast<int>(i), k});
  }
  return gens;
}

GradedBasis::GradedBasis(const DimensionVector& d, int degree, std::uint64_t cap)
    : degree_(degree), generators_(generators_of(d)) {
  if (degree < 0) throw InvalidInput("degree must be nonnegative");
  walk_monomials(
      generators_, degree, [](std::size_t, int) {},
      [&](const std::vector<int>& e) {
        if (monomials_.size() == cap) {
          throw ResourceLimit("degree-" + std::to_string(degree) + " source basis exceeds cap " + std::to_string(cap));
        }
        monomials_.push_back(e);
      });
}

std::string GradedBasis::render(std::size_t index) const {
  const auto& e = monomials_.at(index);
  std::ostringstream os;
  bool first = true;
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (e[g] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << vertex_letter(generators_[g].vertex) << generators_[g].k;
    if (e[g] > 1) os << '^' << e[g];
  }
  if (first) os << '1';
  return os.str();
}

std::string GradedBasis::render(const std::vector<BigInt>& coeffs) const {
  if (coeffs.size() != monomials_.size()) throw InvalidInput("coefficient vector does not match the basis");
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    BigInt c = coeffs[j];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (c != 1) os << c << '*';
    os << render(j);
  }
  if (first) os << '0';
  return os.str();
}

// ---------------------------------------------------------------------------

PhiMap::PhiMap(const DimensionVector& d, int r) : generators_(GradedBasis::generators_of(d)) {
  if (r < 0) throw InvalidInput("rank must be nonnegative");
  for (int j = 1; j <= r + 1; ++j) names_.push_back("y" + std::to_string(j));
  std::vector<std::vector<std::size_t>> vars(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int j = 1; j <= d[i]; ++j) {
      if (j <= r + 1) {
        vars[i].push_back(static_cast<std::size_t>(j - 1));
      } else {
        vars[i].push_back(names_.size());
        names_.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
      }
    }
  }
  const std::size_t nv = names_.size();
  for (std::size_t i = 0; i < d.size(); ++i) {
    // e_0..e_{d_i} of the substituted variables, one variable at a time.
    std::vector<RawPolynomial> e(static_cast<std::size_t>(d[i]) + 1);
    e[0][std::vector<int>(nv, 0)] = 1;
    for (std::size_t v : vars[i]) {
      for (std::size_t k = e.size() - 1; k >= 1; --k) {
        for (const auto& [mono, c] : e[k - 1]) {
          auto m = mono;
          ++m[v];
          e[k][m] += c;
        }
      }
    }
    for (int k = 1; k <= d[i]; ++k) images_.push_back(std::move(e[static_cast<std::size_t>(k)]));
  }
}

RawPolynomial PhiMap::image_of_monomial(const std::vector<int>& exponents) const {
  if (exponents.size() != generators_.size()) throw InvalidInput("monomial has the wrong number of exponents");
  RawPolynomial out;
  out[std::vector<int>(names_.size(), 0)] = 1;
  for (std::size_t g = 0; g < exponents.size(); ++g) {
    for (int a = 0; a < exponents[g]; ++a) out = multiply(out, images_[g]);
  }
  return out;
}

RawPolynomial PhiMap::apply(const HPolynomial& p) const {
  RawPolynomial out;
  for (const auto& [mono, c] : p) {
    if (c == 0) continue;
    for (const auto& [k, v] : image_of_monomial(mono)) {
      auto& slot = out[k];
      slot += c * v;
      if (slot == 0) out.erase(k);
    }
  }
  return out;
}

TargetBasis::TargetBasis(std::size_t variables, int degree, std::uint64_t cap) {
  if (degree < 0) throw InvalidInput("degree must be nonnegative");
  if (variables == 0) {
    if (degree == 0) monomials_.emplace_back();
  } else {
    const BigInt count = binomial(static_cast<unsigned long>(degree) + variables - 1, variables - 1);
    if (count > BigInt(static_cast<unsigned long>(cap))) {
      throw ResourceLimit("target basis has " + to_string(count) + " monomials, above cap " + std::to_string(cap));
    }
    std::vector<int> e(variables, 0);
    auto rec = [&](auto&& self, std::size_t v, int rem) -> void {
      if (v + 1 == variables) {
        e[v] = rem;
        monomials_.push_back(e);
        return;
      }
      for (int a = 0; a <= rem; ++a) {
        e[v] = a;
        self(self, v + 1, rem - a);
      }
    };
    rec(rec, 0, degree);
  }
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t TargetBasis::index_of(const std::vector<int>& exponents) const {
  auto it = index_.find(exponents);
  if (it == index_.end()) throw InvalidInput("monomial is not in the target basis");
  return it->second;
}

std::vector<BigInt> apply_phi(const DimensionVector& d, int r, const HPolynomial& element, int degree,
                              std::uint64_t cap) {
  PhiMap phi(d, r);
  for (const auto& [mono, c] : element) {
    if (mono.size() != phi.generators().size()) throw InvalidInput("monomial has the wrong number of exponents");
    if (c != 0 && weighted_degree(phi.generators(), mono) != degree) {
      throw InvalidInput("element is not homogeneous of degree " + std::to_string(degree));
    }
  }
  TargetBasis basis(phi.target_variables().size(), degree, cap);
  std::vector<BigInt> out(basis.size(), 0);
  for (const auto& [k, v] : phi.apply(element)) out[basis.index_of(k)] = v;
  return out;
}

// ---------------------------------------------------------------------------

GradedKernelResult kernel_rank_at_degree(const DimensionVector& d, int r, int degree, std::uint64_t cap) {
  require_rank_in_range(d, r);
  GradedBasis basis(d, degree, cap);
  GradedKernelResult res;
  res.degree = degree;
  res.source_dim = basis.size();

  std::vector<Packed> packed;
  if (r < d.min()) {
    packed = reduced_columns(d, r, basis.generators(), degree);
  } else {
    PhiMap phi(d, r);
    std::map<std::vector<int>, std::uint64_t> codes;
    for (const auto& mono : basis.monomials()) {
      Packed col;
      for (const auto& [k, v] : phi.image_of_monomial(mono)) {
        auto it = codes.emplace(k, codes.size()).first;
        col.emplace_back(it->second, to_int64(v));
      }
      std::sort(col.begin(), col.end());
      packed.push_back(std::move(col));
    }
  }
  if (packed.size() != basis.size()) throw std::logic_error("column count does not match the source basis");

  std::size_t rows = 0;
  auto columns = index_rows(std::move(packed), rows, cap);
  res.target_dim = rows;
  check_dense_size(rows, columns.size());
  auto kernel = certified_kernel(columns, rows);
  res.kernel_rank = kernel.dimension;
  for (auto& v : kernel.basis) {
    // Sign convention: first nonzero coefficient positive.
    auto lead = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
    if (lead != v.end() && *lead < 0) {
      for (auto& x : v) x = -x;
    }
  }
  res.kernel_basis = std::move(kernel.basis);
  return res;
}

LowestKernel lowest_kernel(const DimensionVector& d, int r, int n_max, std::uint64_t cap) {
  require_rank_in_range(d, r);
  LowestKernel out;
  if (r == d.min()) {
    out.degree = 0;
    out.rank = 1;
    out.degenerate = true;
    return out;
  }
  for (int n = 1; n <= n_max; ++n) {
    auto piece = kernel_rank_at_degree(d, r, n, cap);
    if (piece.kernel_rank > 0) {
      out.degree = n;
      out.rank = static_cast<unsigned long>(piece.kernel_rank);
      out.piece = std::move(piece);
      return out;
    }
  }
  throw NotFound("kernel of phi_" + std::to_string(r) + " vanishes through degree " + std::to_string(n_max));
}

}  // namespace quiver
