#pragma once

#include <cstdint>
#include <vector>

#include "diffposet/matrix.hpp"
#include "diffposet/poset.hpp"
#include "diffposet/rat.hpp"

namespace diffposet {

/// The 0/1 matrix of U_n : QP_n -> QP_{n+1} (direction Up, needs
/// n < max_rank) or D_n : QP_n -> QP_{n-1} (direction Down, needs n >= 1).
/// Sparse storage; entry (y, x) = 1 exactly when the pair is a cover.
RatMatrix operator_matrix(const GradedPoset& poset, int n, Direction direction);

/// D_{n+1} U_n as an integer matrix on QP_n: entry (x, y) counts common
/// upper covers.
RatMatrix du_matrix(const GradedPoset& poset, int n);

/// Exact inverse of D_{n+1} U_n on QP_n, by Gauss-Jordan elimination.
/// Throws std::domain_error("not differential at rank n") if singular,
/// which cannot happen on a verified differential poset.
RatMatrix du_inverse_direct(const GradedPoset& poset, int n);

/// The same inverse from the alternating operator series
///   sum_{k=0}^{n-1} (-1)^k U^k D^k / (r^{k+1} (k+1)!),
/// evaluated on QP_{n-1} by exact path counting; the Gram numbers
/// <D^k x, D^k y> are accumulated by walking the Hasse diagram downward.
/// Equals du_inverse_direct(poset, n-1) exactly on differential posets.
RatMatrix du_inverse_series(const GradedPoset& poset, int r, int n);

/// The orthogonal projection M_n = U (DU)^{-1} D_n of QP_n onto the image
/// of U_{n-1}, assembled from the elimination inverse (independent of the
/// path-counting entry formula). Dense, symmetric, idempotent, with trace
/// p_{n-1}.
RatMatrix projection_matrix(const GradedPoset& poset, int r, int n);

/// One entry of M_n by the path-counting formula
///   m_xy = sum_{k=1}^n (-1)^{k-1} <D^k x, D^k y> / (r^k k!),
/// where <D^k x, D^k y> counts pairs of downward paths of length k from x
/// and y meeting in a common element. No matrix inverse involved.
Rat m_entry_via_paths(const GradedPoset& poset, int r, ElementRef x, ElementRef y);

/// Downward path-count profile of x: counts[k][z] is the number of downward
/// Hasse paths of length k from x ending at the rank-(x.rank - k) element z,
/// for k = 0..depth.
std::vector<std::vector<BigInt>> descent_counts(const GradedPoset& poset, ElementRef x, int depth);

/// <D^k x, D^k y> as an exact integer (x, y in a common rank, k <= rank).
BigInt descent_dot(const GradedPoset& poset, ElementRef x, ElementRef y, int k);

/// e(x) for every x of rank n: the number of upward Hasse paths from the
/// bottom, computed by the recurrence e(x) = sum over lower covers.
/// Entries are positive integers.
RatVector e_vector(const GradedPoset& poset, int n);

struct SumOfSquaresCheck {
    BigInt lhs;  // sum of e(x)^2 over rank n
    BigInt rhs;  // r^n n!
    bool ok = false;
};

SumOfSquaresCheck sum_of_squares_check(const GradedPoset& poset, int r, int n);

}  // namespace diffposet
