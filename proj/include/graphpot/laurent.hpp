#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "graphpot/graph.hpp"

namespace graphpot {

/// Integer exponent per edge variable (a point of the cochain lattice).
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(int dim) : values_(static_cast<std::size_t>(dim), 0) {}
  ExponentVector(std::initializer_list<int> values);
  explicit ExponentVector(std::span<const int> values);

  int dim() const { return static_cast<int>(values_.size()); }
  int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  void set(int i, int value);
  void add(int i, int delta) { set(i, (*this)[i] + delta); }
  int total_degree() const;
  bool is_zero() const;
  std::vector<int> to_vector() const { return {values_.begin(), values_.end()}; }

  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator-() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<std::int16_t> values_;
};

struct Term {
  ExponentVector exponent;
  mpz_class coefficient;
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
/// Terms are kept in lexicographic exponent order; zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<ExponentVector, mpz_class>;

  explicit LaurentPoly(int num_vars = 0) : num_vars_(num_vars) {}

  static LaurentPoly constant(int num_vars, const mpz_class& c);
  static LaurentPoly monomial(const ExponentVector& exponent, const mpz_class& c = 1);

  int num_vars() const { return num_vars_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient at `exponent`, zero if absent.
  mpz_class coefficient(const ExponentVector& exponent) const;
  void add_term(const ExponentVector& exponent, const mpz_class& c);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly operator+(const LaurentPoly& other) const;
  LaurentPoly operator-(const LaurentPoly& other) const;
  LaurentPoly operator*(const LaurentPoly& other) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void check_dim(int dim) const;

  int num_vars_ = 0;
  TermMap terms_;
};

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& w, int n);

enum class Pruning { kDisabled, kEnabled };

/// Constant term of w^n. With pruning, intermediate monomials that can no
/// longer return to the origin within the remaining factors are discarded.
mpz_class pow_constant_term(const LaurentPoly& w, int n, Pruning pruning = Pruning::kEnabled);

/// Largest |exponent| of variable i over the terms of w.
std::vector<int> max_steps(const LaurentPoly& w);

/// Exact substitution; every coordinate must be nonzero.
mpq_class evaluate(const LaurentPoly& w, std::span<const mpq_class> point);

std::vector<Term> support_points(const LaurentPoly& w);

/// Multiplies each term by (-1)^<cycle, exponent>. `cycle` must be an F2 1-cycle of `g`.
LaurentPoly sign_flip(const LaurentPoly& w, const TrivalentGraph& g,
                      std::span<const std::uint8_t> cycle);

bool is_cycle(const TrivalentGraph& g, std::span<const std::uint8_t> edges);

}  // namespace graphpot
