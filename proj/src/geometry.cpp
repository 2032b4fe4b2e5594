#include "graphpot/geometry.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <numeric>

#include "graphpot/error.hpp"

namespace graphpot::geom {

namespace {

constexpr std::size_t kMaxRows = 512;
using ZeroSet = std::bitset<kMaxRows>;

long long narrow(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw RangeError("integer overflow in exact geometry");
  return static_cast<long long>(v);
}

__int128 dot128(const IntVec& a, const IntVec& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

int sign(__int128 v) { return (v > 0) - (v < 0); }

std::vector<std::vector<mpq_class>> to_mpq(const std::vector<IntVec>& rows) {
  std::vector<std::vector<mpq_class>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<mpq_class> q;
    q.reserve(r.size());
    for (long long x : r) q.emplace_back(static_cast<long>(x));
    m.push_back(std::move(q));
  }
  return m;
}

// Row-reduces in place; returns pivot columns.
std::vector<int> row_reduce(std::vector<std::vector<mpq_class>>& m, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c];
      for (int j = 0; j < static_cast<int>(m[i].size()); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

IntVec scale_to_integer(const std::vector<mpq_class>& q) {
  mpz_class l = 1;
  for (const auto& x : q) l = lcm(l, mpz_class(x.get_den()));
  IntVec v;
  v.reserve(q.size());
  for (const auto& x : q) {
    mpz_class z = x.get_num() * (l / x.get_den());
    if (!z.fits_slong_p()) throw RangeError("integer overflow in exact geometry");
    v.push_back(z.get_si());
  }
  return primitive(std::move(v));
}

}  // namespace

long long dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: dimension mismatch");
  return narrow(dot128(a, b));
}

IntVec primitive(IntVec v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

int rank(const std::vector<IntVec>& rows) {
  if (rows.empty()) return 0;
  auto m = to_mpq(rows);
  return static_cast<int>(row_reduce(m, static_cast<int>(rows[0].size())).size());
}

mpz_class determinant(const std::vector<IntVec>& square) {
  const std::size_t n = square.size();
  for (const auto& r : square)
    if (r.size() != n) throw DimensionError("determinant: matrix is not square");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(square[i][j]);
  int s = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return s * m[n - 1][n - 1];
}

std::optional<std::vector<mpq_class>> coordinates_in_span(const std::vector<IntVec>& basis,
                                                          const IntVec& p) {
  const std::size_t k = basis.size();
  const std::size_t n = p.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (basis[j].size() != n) throw DimensionError("coordinates_in_span: dimension mismatch");
      m[i][j] = static_cast<long>(basis[j][i]);
    }
    m[i][k] = static_cast<long>(p[i]);
  }
  auto piv = row_reduce(m, static_cast<int>(k + 1));
  if (!piv.empty() && piv.back() == static_cast<int>(k)) return std::nullopt;
  if (piv.size() != k) throw PreconditionError("coordinates_in_span: basis is dependent");
  std::vector<mpq_class> out(k);
  for (std::size_t r = 0; r < piv.size(); ++r) out[piv[r]] = m[r][k];
  return out;
}

std::vector<IntVec> extreme_rays(const std::vector<IntVec>& rows, int dim) {
  if (rows.size() > kMaxRows) throw RangeError("extreme_rays: too many inequalities");
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim) throw DimensionError("extreme_rays: row dimension");

  // Initial simplicial cone from dim independent rows.
  std::vector<std::size_t> basis;
  std::vector<IntVec> chosen;
  for (std::size_t i = 0; i < rows.size() && static_cast<int>(basis.size()) < dim; ++i) {
    chosen.push_back(rows[i]);
    if (rank(chosen) == static_cast<int>(chosen.size())) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (static_cast<int>(basis.size()) != dim)
    throw PreconditionError("extreme_rays: cone is not pointed");

  // Columns of the inverse of the basis matrix.
  std::vector<std::vector<mpq_class>> aug(dim, std::vector<mpq_class>(2 * dim));
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) aug[i][j] = static_cast<long>(chosen[i][j]);
    aug[i][dim + i] = 1;
  }
  row_reduce(aug, dim);

  struct Ray {
    IntVec v;
    ZeroSet zero;
  };
  std::vector<Ray> rays;
  for (int j = 0; j < dim; ++j) {
    std::vector<mpq_class> col(dim);
    for (int i = 0; i < dim; ++i) col[i] = aug[i][dim + j];
    Ray r{scale_to_integer(col), {}};
    for (int i = 0; i < dim; ++i)
      if (i != j) r.zero.set(basis[i]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> in_basis(rows.size(), false);
  for (auto b : basis) in_basis[b] = true;

  for (std::size_t row = 0; row < rows.size(); ++row) {
    if (in_basis[row]) continue;
    const IntVec& a = rows[row];
    std::vector<int> sg(rays.size());
    std::vector<__int128> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot128(a, rays[i].v);
      sg[i] = sign(val[i]);
      if (sg[i] > 0) pos.push_back(i);
      if (sg[i] < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (sg[i] == 0) rays[i].zero.set(row);
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sg[i] < 0) continue;
      Ray r = rays[i];
      if (sg[i] == 0) r.zero.set(row);
      next.push_back(std::move(r));
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        ZeroSet common = rays[p].zero & rays[q].zero;
        if (static_cast<int>(common.count()) < dim - 2) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          if ((common & ~rays[o].zero).none()) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] > 0 > val[q]: val[p] * q - val[q] * p lies on the hyperplane.
        std::vector<__int128> w(dim);
        __int128 g = 0;
        for (int k = 0; k < dim; ++k) {
          w[k] = val[p] * rays[q].v[k] - val[q] * rays[p].v[k];
          __int128 x = w[k] < 0 ? -w[k] : w[k];
          while (x != 0) {
            __int128 t = g % x;
            g = x;
            x = t;
          }
        }
        IntVec v(dim);
        for (int k = 0; k < dim; ++k) v[k] = narrow(g > 1 ? w[k] / g : w[k]);
        common.set(row);
        next.push_back(Ray{std::move(v), common});
      }
    }
    rays = std::move(next);
  }

  std::vector<IntVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<HalfSpace> hull_facets(const std::vector<IntVec>& points) {
  if (points.empty()) throw PreconditionError("hull_facets: empty point set");
  const int n = static_cast<int>(points[0].size());
  std::vector<IntVec> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw DimensionError("hull_facets: point dimension");
    IntVec r = p;
    r.push_back(-1);
    rows.push_back(std::move(r));
  }
  if (rank(rows) != n + 1) throw PreconditionError("hull_facets: points are not full-dimensional");
  std::vector<HalfSpace> out;
  for (auto& ray : extreme_rays(rows, n + 1)) {
    HalfSpace h;
    h.offset = ray.back();
    ray.pop_back();
    if (std::all_of(ray.begin(), ray.end(), [](long long x) { return x == 0; })) continue;
    h.normal = std::move(ray);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalPoint> hrep_vertices(const std::vector<HalfSpace>& inequalities, int dim) {
  std::vector<IntVec> rows;
  rows.reserve(inequalities.size() + 1);
  for (const auto& h : inequalities) {
    if (static_cast<int>(h.normal.size()) != dim)
      throw DimensionError("hrep_vertices: inequality dimension");
    IntVec r = h.normal;
    r.push_back(-h.offset);
    rows.push_back(std::move(r));
  }
  IntVec t(dim + 1, 0);
  t[dim] = 1;
  rows.push_back(t);
  std::vector<RationalPoint> out;
  for (auto& ray : extreme_rays(rows, dim + 1)) {
    long long d = ray.back();
    if (d == 0) throw PreconditionError("hrep_vertices: polytope is unbounded");
    ray.pop_back();
    out.push_back(RationalPoint{std::move(ray), d});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies(const HalfSpace& h, const RationalPoint& x) {
  return dot128(h.normal, x.numer) >= static_cast<__int128>(h.offset) * x.denom;
}

std::vector<std::size_t> irredundant(const std::vector<HalfSpace>& inequalities,
                                     const std::vector<RationalPoint>& vertices) {
  std::vector<std::size_t> out;
  std::vector<std::pair<std::vector<mpq_class>, mpq_class>> seen;
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    const auto& h = inequalities[i];
    auto key = normalized(h);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    std::vector<IntVec> tight;
    for (const auto& v : vertices) {
      if (dot128(h.normal, v.numer) == static_cast<__int128>(h.offset) * v.denom) {
        IntVec hv = v.numer;
        hv.push_back(v.denom);
        tight.push_back(std::move(hv));
      }
    }
    if (!tight.empty() && rank(tight) == static_cast<int>(h.normal.size())) {
      seen.push_back(std::move(key));
      out.push_back(i);
    }
  }
  return out;
}

std::pair<std::vector<mpq_class>, mpq_class> normalized(const HalfSpace& h) {
  mpq_class scale;
  if (h.offset != 0) {
    scale = mpq_class(1, static_cast<unsigned long>(std::llabs(h.offset)));
  } else {
    long long g = 0;
    for (long long x : h.normal) g = std::gcd(g, x);
    scale = g == 0 ? mpq_class(1) : mpq_class(1, static_cast<unsigned long>(g));
  }
  std::vector<mpq_class> n;
  for (long long x : h.normal) n.push_back(mpq_class(static_cast<long>(x)) * scale);
  return {std::move(n), mpq_class(static_cast<long>(h.offset)) * scale};
}

}  // namespace graphpot::geom
