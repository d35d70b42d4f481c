#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffposet/poset.hpp"
#include "diffposet/rat.hpp"

namespace diffposet {

/// Young's lattice truncated at max_rank. Rank n holds the integer
/// partitions of n in descending lexicographic order of their part
/// sequences, e.g. rank 3: (3), (2,1), (1,1,1). y covers x exactly when the
/// diagram of y is that of x plus one cell. Labels carry partition notation.
GradedPoset build_young(int max_rank);

/// The r-fold product of Young's lattice. Rank n holds the r-tuples of
/// partitions with total size n, ordered lexicographically coordinate by
/// coordinate (coordinates compared in the same descending lexicographic
/// partition order, across sizes). Covers add one cell in one coordinate.
GradedPoset build_young_power(int r, int max_rank);

/// The Fibonacci lattice Z(r), built rank by rank from a single point:
/// first one reflected element per member of the rank two below (covering
/// exactly the covers of its source), then r fresh singletons over every
/// element of the previous rank. Within a new rank, reflections come first
/// in source order, then singletons grouped by the element they cover.
/// Labels record provenance: "[x]" for the reflection of x, "y.i" for the
/// i-th singleton over y.
GradedPoset build_fibonacci(int r, int max_rank);

/// |Z(r)|_n by the integer recurrence z_n = r*z_{n-1} + z_{n-2},
/// z_0 = 1, z_1 = r. Exact.
BigInt zr_rank_size(int r, int n);

/// Parses the line-oriented poset text format (see formats.hpp), then runs
/// validate() and throws PosetValidationError unless it passes.
GradedPoset import_poset(const std::string& text);

struct DifferentialFailure {
    int rank = 0;
    ElementRef x, y;
    std::int64_t expected = 0;  // common lower covers + r on the diagonal
    std::int64_t actual = 0;    // common upper covers
};

struct DifferentialReport {
    int r = 0;
    int verified_through = -1;  // largest n with the axiom checked
    std::vector<DifferentialFailure> failures;
    bool weakly_increasing = false;

    bool ok() const { return failures.empty(); }
};

/// Checks D_{n+1} U_n - U_{n-1} D_n = r*I exactly for every n below the
/// truncation boundary. Two routes are computed and must agree: the integer
/// operator products assembled from the adjacency, and direct common-cover
/// counting per element pair (for x != y the number of common upper covers
/// must equal the number of common lower covers; on the diagonal the up
/// degree must exceed the down degree by exactly r). Violations are
/// reported, not thrown.
DifferentialReport verify_differential(const GradedPoset& poset, int r);

}  // namespace diffposet
