#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <vector>

namespace graphpot::geom {

using IntVec = std::vector<long long>;

/// <normal, x> >= offset
struct HalfSpace {
  IntVec normal;
  long long offset = 0;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend auto operator<=>(const HalfSpace&, const HalfSpace&) = default;
};

/// numer / denom with denom > 0 and gcd(numer..., denom) = 1.
struct RationalPoint {
  IntVec numer;
  long long denom = 1;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend auto operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

long long dot(const IntVec& a, const IntVec& b);

/// Divides by the gcd of the entries (sign kept).
IntVec primitive(IntVec v);

int rank(const std::vector<IntVec>& rows);
mpz_class determinant(const std::vector<IntVec>& square);

/// Coefficients of p in the (linearly independent) vectors `basis`, or nullopt
/// when p is outside their span.
std::optional<std::vector<mpq_class>> coordinates_in_span(const std::vector<IntVec>& basis,
                                                          const IntVec& p);

/// Extreme rays of the pointed cone {x : <row, x> >= 0 for every row}, as
/// primitive integer vectors, by the double description method.
std::vector<IntVec> extreme_rays(const std::vector<IntVec>& rows, int dim);

/// Facets of conv(points) for a full-dimensional point set, each as a
/// primitive integer half-space; sorted.
std::vector<HalfSpace> hull_facets(const std::vector<IntVec>& points);

/// Vertices of the bounded, full-dimensional polytope {x : <a_i, x> >= b_i}; sorted.
std::vector<RationalPoint> hrep_vertices(const std::vector<HalfSpace>& inequalities, int dim);

/// Inequalities of `inequalities` that define facets, given the vertex set of
/// their polytope. Duplicates are reported once (first occurrence).
std::vector<std::size_t> irredundant(const std::vector<HalfSpace>& inequalities,
                                     const std::vector<RationalPoint>& vertices);

/// True if <a, x> >= b for the rational point x.
bool satisfies(const HalfSpace& h, const RationalPoint& x);

/// Normal form of a half-space for set comparison: scaled so the offset is -1
/// when it is negative; otherwise primitive.
std::pair<std::vector<mpq_class>, mpq_class> normalized(const HalfSpace& h);

}  // namespace graphpot::geom
