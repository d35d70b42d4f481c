#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "diffposet/matrix.hpp"
#include "diffposet/poset.hpp"
#include "diffposet/rat.hpp"

namespace diffposet {

/// Principal submatrix of M with rows and columns restricted to the
/// witness elements, in increasing index order. The witness must live in
/// the rank M projects (when the matrix carries a rank tag).
RatMatrix submatrix(const RatMatrix& m, const std::vector<ElementRef>& witness);

struct GershgorinResult {
    bool excluded = false;  // 1 lies strictly outside every disc
    Rat margin;             // min over rows of |1 - a_ss| - sum_{t != s} |a_st|
};

/// Gershgorin test that 1 is not an eigenvalue: every row must satisfy
/// |1 - a_ss| > sum of off-diagonal absolute values, strictly (boundary
/// discs may contain 1, so ties fail). Sufficient, not necessary.
GershgorinResult gershgorin_excludes_one(const RatMatrix& a);

struct DeterminantResult {
    bool excluded = false;  // det(A - I) != 0
    Rat det_value;
};

/// Exact iff-test: 1 is an eigenvalue of A exactly when det(A - I) = 0.
DeterminantResult determinant_excludes_one(const RatMatrix& a);

enum class CertMethod { Gershgorin, Determinant };
enum class CertStrategy { Auto, Gershgorin, Determinant };

/// A checked rank-gap certificate: a valid certificate proves that the gap
/// at `rank` is at least `bound` = |witness|, because the witness span meets
/// the image of U trivially when M_S has no eigenvalue 1.
struct GapCertificate {
    int rank = 0;
    std::vector<ElementRef> witness;  // sorted by index
    CertMethod method = CertMethod::Gershgorin;
    std::uint64_t bound = 0;
    Rat margin;  // Gershgorin: min row margin; Determinant: det(M_S - I)
    bool valid = false;
};

/// Builds the certificate for witness S at rank n. Auto tries Gershgorin
/// first (it yields a margin and mirrors the source arguments) and falls
/// back to the exact determinant test. When the certificate is valid the
/// directly observed gap is checked against the bound; a violation would
/// falsify the method and throws std::logic_error.
GapCertificate certify_gap(const GradedPoset& poset, int r, int n,
                           std::vector<ElementRef> witness,
                           CertStrategy strategy = CertStrategy::Auto);

/// Same, reusing a precomputed projection matrix for rank n.
GapCertificate certify_gap(const GradedPoset& poset, const RatMatrix& projection, int n,
                           std::vector<ElementRef> witness,
                           CertStrategy strategy = CertStrategy::Auto);

/// The canonical 2r-element witness behind the gap >= 2r bound: for each
/// rank-1 element, the two smallest-index rank-2 thread elements covering
/// it, extended upward to rank n. pairs[i] holds the two endpoints over
/// the i-th rank-1 element; elements lists all 2r endpoints sorted.
struct SmallThreadWitness {
    std::vector<std::pair<ElementRef, ElementRef>> pairs;
    std::vector<ElementRef> elements;
};

SmallThreadWitness thread_witness_small(const GradedPoset& poset, int r, int n);

/// All tau_n thread elements of rank n extended to rank N (endpoints are
/// pairwise distinct). The bound delta p_N >= tau_n holds for N >= 4n;
/// smaller N is refused unless allow_below_threshold is set, and even then
/// any certificate produced downstream still rests on the exact tests
/// alone.
std::vector<ElementRef> thread_witness_general(const GradedPoset& poset, int n, int N,
                                               bool allow_below_threshold = false);

/// a(r, n) = n * r^n n! / (r^{3n} (3n)!), the tail bound on off-diagonal
/// entries for thread endpoints.
Rat a_bound(int r, int n);

/// phi_r^n expressed over the relation phi^2 = r*phi + 1:
/// phi_r^n = a*phi_r + b with nonnegative integers a, b.
struct PhiBound {
    int r = 0;
    int n = 0;
    BigInt a, b;
};

PhiBound phi_power(int r, int n);

/// Sign of u + v*sqrt(d) for exact rationals u, v and a positive integer d,
/// decided by sign analysis and integer squaring only.
int quadratic_sign(const Rat& u, const Rat& v, const BigInt& d);

/// Whether p <= 2*phi_r^n, exactly.
bool le_two_phi_pow(const BigInt& p, int r, int n);

/// Decides 2/3 + 2 phi_r^n a(r, n) <= 1 exactly: when it holds, Gershgorin
/// discs exclude eigenvalue 1 on any thread-endpoint witness grown from
/// rank n, whatever the poset.
bool thread_gap_sufficient_condition(int r, int n);

/// The three entry values predicted for the small thread witness at rank
/// n >= 2: the diagonal alternating sum 1/r - 1/(2! r^2) + ... +/- 1/(n! r^n),
/// the paired entry |1/(r^{n-1} (n-1)!) - 1/(r^n n!)| for the two endpoints
/// over a common rank-1 element, and 1/(r^n n!) for endpoints over distinct
/// rank-1 elements (threads meeting only at the bottom).
struct ClosedFormEntries {
    Rat diag;
    Rat paired;
    Rat generic;
};

ClosedFormEntries closed_form_thread_entries(int r, int n);

struct GrowthBoundRow {
    int n = 0;
    BigInt p;        // observed rank size
    BigInt z;        // |Z(r)|_n by the recurrence
    bool le_z = false;
    bool le_phi = false;  // p <= 2 phi_r^n
};

struct GrowthBoundReport {
    int r = 0;
    bool ok = false;
    std::vector<GrowthBoundRow> rows;
};

/// Checks p_n <= |Z(r)|_n <= 2 phi_r^n for every rank of the truncation.
GrowthBoundReport growth_bound_check(const GradedPoset& poset, int r);

struct ReplayRow {
    int n = 0;
    std::int64_t observed_gap = 0;
    bool observed_ok = false;  // observed gap >= 2r
    GapCertificate gershgorin;
    GapCertificate determinant;

    bool certified() const { return gershgorin.valid || determinant.valid; }
};

struct ReplayReport {
    int r = 0;
    std::uint64_t bound = 0;        // 2r
    int first_applicable_rank = 0;  // 4 when r = 1, 3 when r = 2, else 2
    std::vector<ReplayRow> rows;
    bool ok = false;
};

/// Replays the gap >= 2r bound on a concrete poset: for every applicable
/// rank, checks the observed gap against 2r and certifies the small thread
/// witness by both methods.
ReplayReport replay_gap_bound(const GradedPoset& poset, int r);

}  // namespace diffposet
