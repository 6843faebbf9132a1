#pragma once

/**
 * @file polynomial.hpp
 * @brief Univariate polynomials over Q(i) and exact eigenvalue recovery.
 *
 * Roots are located numerically (Durand-Kerner on the squarefree part in
 * multiprecision floats), rounded to Gaussian rationals by continued
 * fractions and then accepted only if they vanish exactly. Irrational roots
 * are therefore never reported.
 */

#include "cornerlab/matrix.hpp"

#include <vector>

namespace cornerlab {

/// Coefficients from the constant term upward; the zero polynomial is empty.
using Poly = std::vector<GaussianRational>;

void trim(Poly& p);
/// -1 for the zero polynomial.
long degree(const Poly& p);
GaussianRational evaluate(const Poly& p, const GaussianRational& x);
Poly derivative(const Poly& p);
/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<Poly, Poly> divide(const Poly& a, const Poly& b);
/// Monic greatest common divisor (empty when both are zero).
Poly poly_gcd(Poly a, Poly b);
Poly squarefree_part(const Poly& p);

/// det(x I - a) by the Faddeev-LeVerrier recurrence.
Poly charpoly(const Mat& a);

/// Distinct roots of p lying in Q(i), in lexicographic (re, im) order.
std::vector<GaussianRational> gaussian_rational_roots(const Poly& p);
/// Distinct eigenvalues of a lying in Q(i).
std::vector<GaussianRational> rational_eigenvalues(const Mat& a);

}  // namespace cornerlab
