#include "graphpot/laurent.hpp"

#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "graphpot/error.hpp"

namespace graphpot {

ExponentVector::ExponentVector(std::initializer_list<int> values) {
  for (int v : values) {
    values_.push_back(0);
    set(dim() - 1, v);
  }
}

ExponentVector::ExponentVector(std::span<const int> values) {
  for (int v : values) {
    values_.push_back(0);
    set(dim() - 1, v);
  }
}

void ExponentVector::set(int i, int value) {
  if (value < std::numeric_limits<std::int16_t>::min() ||
      value > std::numeric_limits<std::int16_t>::max()) {
    throw RangeError("exponent exceeds 16-bit range");
  }
  values_.at(static_cast<std::size_t>(i)) = static_cast<std::int16_t>(value);
}

int ExponentVector::total_degree() const {
  int s = 0;
  for (auto v : values_) s += v;
  return s;
}

bool ExponentVector::is_zero() const {
  for (auto v : values_) {
    if (v != 0) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (dim() != other.dim()) throw DimensionError("exponent vectors of different length");
  ExponentVector out(dim());
  for (int i = 0; i < dim(); ++i) out.set(i, (*this)[i] + other[i]);
  return out;
}

ExponentVector ExponentVector::operator-() const {
  ExponentVector out(dim());
  for (int i = 0; i < dim(); ++i) out.set(i, -(*this)[i]);
  return out;
}

LaurentPoly LaurentPoly::constant(int num_vars, const mpz_class& c) {
  LaurentPoly p(num_vars);
  p.add_term(ExponentVector(num_vars), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVector& exponent, const mpz_class& c) {
  LaurentPoly p(exponent.dim());
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::check_dim(int dim) const {
  if (dim != num_vars_) throw DimensionError("Laurent polynomials in different numbers of variables");
}

mpz_class LaurentPoly::coefficient(const ExponentVector& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVector& exponent, const mpz_class& c) {
  check_dim(exponent.dim());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_dim(other.num_vars_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  out += other;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
  LaurentPoly out = *this;
  check_dim(other.num_vars_);
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
  check_dim(other.num_vars_);
  LaurentPoly out(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly pow(const LaurentPoly& w, int n) {
  if (n < 0) throw DomainError("negative power");
  LaurentPoly out = LaurentPoly::constant(w.num_vars(), 1);
  for (int i = 0; i < n; ++i) out = out * w;
  return out;
}

std::vector<int> max_steps(const LaurentPoly& w) {
  std::vector<int> steps(static_cast<std::size_t>(w.num_vars()), 0);
  for (const auto& [e, c] : w.terms()) {
    for (int i = 0; i < e.dim(); ++i) {
      steps[static_cast<std::size_t>(i)] = std::max(steps[static_cast<std::size_t>(i)], std::abs(e[i]));
    }
  }
  return steps;
}

namespace {

// Mixed-radix packing of exponent vectors whose coordinates are bounded by
// +-bound[i]; sums of in-range vectors stay decodable as long as the result is
// in range, so products can add packed offsets directly.
class Packer {
 public:
  explicit Packer(const std::vector<int>& bound) : bound_(bound) {
    radix_.resize(bound.size());
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < bound.size(); ++i) {
      radix_[i] = static_cast<std::uint64_t>(r);
      r *= static_cast<unsigned>(2 * bound[i] + 1);
      if (r > (static_cast<unsigned __int128>(1) << 62)) fits_ = false;
    }
  }
  bool fits() const { return fits_; }
  std::uint64_t pack(const std::vector<int>& x) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      k += static_cast<std::uint64_t>(x[i] + bound_[i]) * radix_[i];
    }
    return k;
  }
  void unpack(std::uint64_t k, std::vector<int>& x) const {
    x.resize(bound_.size());
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      const auto size = static_cast<std::uint64_t>(2 * bound_[i] + 1);
      x[i] = static_cast<int>(k % size) - bound_[i];
      k /= size;
    }
  }
  std::int64_t offset(const std::vector<int>& y) const {
    std::int64_t o = 0;
    for (std::size_t i = 0; i < y.size(); ++i) o += static_cast<std::int64_t>(y[i]) * static_cast<std::int64_t>(radix_[i]);
    return o;
  }
  std::uint64_t negate(std::uint64_t k) const { return 2 * origin() - k; }
  std::uint64_t origin() const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < bound_.size(); ++i) k += static_cast<std::uint64_t>(bound_[i]) * radix_[i];
    return k;
  }

 private:
  std::vector<int> bound_;
  std::vector<std::uint64_t> radix_;
  bool fits_ = true;
};

using PackedPoly = std::unordered_map<std::uint64_t, mpz_class>;

mpz_class pruned_constant_term(const LaurentPoly& w, int n) {
  const int dim = w.num_vars();
  const std::vector<int> step = max_steps(w);
  std::vector<int> bound(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) bound[static_cast<std::size_t>(i)] = n * step[static_cast<std::size_t>(i)];
  Packer packer(bound);
  if (!packer.fits()) {
    // Exponent box too large for 64-bit keys; multiply term maps directly.
    LaurentPoly cur = LaurentPoly::constant(dim, 1);
    for (int j = 1; j <= n; ++j) {
      LaurentPoly next(dim);
      const int rem = n - j;
      for (const auto& [ea, ca] : cur.terms()) {
        for (const auto& [eb, cb] : w.terms()) {
          ExponentVector s = ea + eb;
          bool keep = true;
          for (int i = 0; i < dim && keep; ++i) keep = std::abs(s[i]) <= rem * step[static_cast<std::size_t>(i)];
          if (keep) next.add_term(s, ca * cb);
        }
      }
      cur = std::move(next);
    }
    return cur.coefficient(ExponentVector(dim));
  }

  struct Factor {
    std::vector<int> exp;
    std::int64_t offset;
    mpz_class coef;
  };
  std::vector<Factor> factors;
  for (const auto& [e, c] : w.terms()) {
    auto v = e.to_vector();
    factors.push_back({v, packer.offset(v), c});
  }

  // Meet in the middle: [w^n]_0 = sum_m [w^h]_m [w^(n-h)]_{-m}.
  const int half = (n + 1) / 2;
  PackedPoly cur{{packer.origin(), mpz_class(1)}};
  PackedPoly lower;  // w^(n - half), kept when n is odd
  std::vector<int> x;
  mpz_class tmp;
  for (int j = 1; j <= half; ++j) {
    if (j - 1 == n - half && (n % 2 == 1)) lower = cur;
    PackedPoly next;
    next.reserve(cur.size() * 4);
    const int rem = n - j;
    for (const auto& [key, coef] : cur) {
      packer.unpack(key, x);
      for (const Factor& f : factors) {
        bool keep = true;
        for (int i = 0; i < dim; ++i) {
          const auto ui = static_cast<std::size_t>(i);
          if (std::abs(x[ui] + f.exp[ui]) > rem * step[ui]) {
            keep = false;
            break;
          }
        }
        if (!keep) continue;
        const auto nk = static_cast<std::uint64_t>(static_cast<std::int64_t>(key) + f.offset);
        tmp = coef * f.coef;
        next[nk] += tmp;
      }
    }
    cur = std::move(next);
  }
  const PackedPoly& other = (n % 2 == 0) ? cur : lower;
  mpz_class total = 0;
  for (const auto& [key, coef] : cur) {
    auto it = other.find(packer.negate(key));
    if (it != other.end()) total += coef * it->second;
  }
  return total;
}

}  // namespace

mpz_class pow_constant_term(const LaurentPoly& w, int n, Pruning pruning) {
  if (n < 0) throw DomainError("negative power");
  if (n == 0) return 1;
  if (pruning == Pruning::kDisabled) return pow(w, n).coefficient(ExponentVector(w.num_vars()));
  return pruned_constant_term(w, n);
}

mpq_class evaluate(const LaurentPoly& w, std::span<const mpq_class> point) {
  if (static_cast<int>(point.size()) != w.num_vars()) throw DimensionError("evaluation point has wrong length");
  for (const auto& p : point) {
    if (p == 0) throw DomainError("evaluation point has a zero coordinate");
  }
  mpq_class total = 0;
  for (const auto& [e, c] : w.terms()) {
    mpq_class term = c;
    for (int i = 0; i < e.dim(); ++i) {
      const mpq_class& base = point[static_cast<std::size_t>(i)];
      const int k = e[i];
      for (int r = 0; r < std::abs(k); ++r) {
        if (k > 0) {
          term *= base;
        } else {
          term /= base;
        }
      }
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

std::vector<Term> support_points(const LaurentPoly& w) {
  std::vector<Term> out;
  out.reserve(w.num_terms());
  for (const auto& [e, c] : w.terms()) out.push_back({e, c});
  return out;
}

bool is_cycle(const TrivalentGraph& g, std::span<const std::uint8_t> edges) {
  if (static_cast<int>(edges.size()) != g.num_edges()) return false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    int meets = 0;
    for (EdgeId s : g.slots(v)) {
      if (s != kHalfEdgeSlot && (edges[static_cast<std::size_t>(s)] & 1)) ++meets;
    }
    if (meets % 2 != 0) return false;
  }
  return true;
}

LaurentPoly sign_flip(const LaurentPoly& w, const TrivalentGraph& g,
                      std::span<const std::uint8_t> cycle) {
  if (w.num_vars() != g.num_edges()) throw DimensionError("polynomial and graph disagree on edge count");
  if (!is_cycle(g, cycle)) throw PreconditionError("edge set is not an F2 1-cycle");
  LaurentPoly out(w.num_vars());
  for (const auto& [e, c] : w.terms()) {
    int pairing = 0;
    for (int i = 0; i < e.dim(); ++i) {
      if (cycle[static_cast<std::size_t>(i)] & 1) pairing += e[i];
    }
    out.add_term(e, (pairing % 2 != 0) ? mpz_class(-c) : c);
  }
  return out;
}

}  // namespace graphpot
