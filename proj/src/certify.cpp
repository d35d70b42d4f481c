#include "diffposet/certify.hpp"

#include <algorithm>
#include <stdexcept>

#include "diffposet/builders.hpp"
#include "diffposet/linalg.hpp"
#include "diffposet/threads.hpp"

namespace diffposet {

RatMatrix submatrix(const RatMatrix& m, const std::vector<ElementRef>& witness) {
    if (!m.is_square()) throw std::invalid_argument("submatrix: non-square source");
    if (witness.empty()) throw std::invalid_argument("submatrix: empty witness");
    std::vector<std::uint32_t> indices;
    for (const ElementRef& e : witness) {
        if (m.codomain_rank >= 0 && e.rank != m.codomain_rank)
            throw std::invalid_argument("submatrix: witness element outside the matrix rank");
        if (e.index >= m.rows()) throw std::invalid_argument("submatrix: witness index out of range");
        indices.push_back(e.index);
    }
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw std::invalid_argument("submatrix: duplicate witness element");
    RatMatrix out = RatMatrix::dense(indices.size(), indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t j = 0; j < indices.size(); ++j) out.set(i, j, m.at(indices[i], indices[j]));
    return out;
}

GershgorinResult gershgorin_excludes_one(const RatMatrix& a) {
    if (!a.is_square() || a.rows() == 0)
        throw std::invalid_argument("gershgorin_excludes_one: needs a nonempty square matrix");
    GershgorinResult result;
    for (std::size_t s = 0; s < a.rows(); ++s) {
        Rat radius;
        for (std::size_t t = 0; t < a.cols(); ++t)
            if (t != s) radius += a.at(s, t).abs();
        const Rat row_margin = (Rat(1) - a.at(s, s)).abs() - radius;
        if (s == 0 || row_margin < result.margin) result.margin = row_margin;
    }
    result.excluded = result.margin > Rat(0);
    return result;
}

DeterminantResult determinant_excludes_one(const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant_excludes_one: non-square matrix");
    DeterminantResult result;
    result.det_value = determinant(subtract(a, RatMatrix::identity(a.rows())));
    result.excluded = !result.det_value.is_zero();
    return result;
}

namespace {

GapCertificate run_certificate(const GradedPoset& poset, const RatMatrix& projection, int n,
                               std::vector<ElementRef> witness, CertStrategy strategy) {
    std::sort(witness.begin(), witness.end());
    const RatMatrix ms = submatrix(projection, witness);
    GapCertificate cert;
    cert.rank = n;
    cert.witness = std::move(witness);
    cert.bound = cert.witness.size();

    bool decided = false;
    if (strategy != CertStrategy::Determinant) {
        const GershgorinResult g = gershgorin_excludes_one(ms);
        cert.method = CertMethod::Gershgorin;
        cert.margin = g.margin;
        cert.valid = g.excluded;
        decided = (strategy == CertStrategy::Gershgorin) || g.excluded;
    }
    if (!decided) {
        const DeterminantResult d = determinant_excludes_one(ms);
        cert.method = CertMethod::Determinant;
        cert.margin = d.det_value;
        cert.valid = d.excluded;
    }

    if (cert.valid) {
        const std::int64_t gap = static_cast<std::int64_t>(poset.rank_size(n)) -
                                 static_cast<std::int64_t>(poset.rank_size(n - 1));
        if (gap < static_cast<std::int64_t>(cert.bound))
            throw std::logic_error("certify_gap: valid certificate contradicts the observed gap");
    }
    return cert;
}

}  // namespace

GapCertificate certify_gap(const GradedPoset& poset, int r, int n,
                           std::vector<ElementRef> witness, CertStrategy strategy) {
    if (n < 1 || n > poset.max_rank())
        throw std::out_of_range("certify_gap: rank outside truncation");
    return run_certificate(poset, projection_matrix(poset, r, n), n, std::move(witness), strategy);
}

GapCertificate certify_gap(const GradedPoset& poset, const RatMatrix& projection, int n,
                           std::vector<ElementRef> witness, CertStrategy strategy) {
    return run_certificate(poset, projection, n, std::move(witness), strategy);
}

SmallThreadWitness thread_witness_small(const GradedPoset& poset, int r, int n) {
    if (n < 2 || n > poset.max_rank())
        throw std::invalid_argument("thread_witness_small: needs 2 <= n <= max_rank");
    if (poset.rank_size(1) != static_cast<std::uint32_t>(r))
        throw std::invalid_argument("thread_witness_small: rank 1 has " +
                                    std::to_string(poset.rank_size(1)) + " elements, expected r");
    SmallThreadWitness witness;
    for (std::uint32_t x = 0; x < poset.rank_size(1); ++x) {
        std::vector<ElementRef> threads;
        for (std::uint32_t j : poset.up(1, x))
            if (is_thread_element(poset, {2, j})) threads.push_back({2, j});
        if (threads.size() < 2)
            throw std::runtime_error(
                "thread_witness_small: fewer than two thread covers over a rank-1 element; "
                "the poset cannot be differential");
        const ElementRef t_end = extend_thread(poset, threads[0], n).elements.back();
        const ElementRef s_end = extend_thread(poset, threads[1], n).elements.back();
        witness.pairs.emplace_back(t_end, s_end);
        witness.elements.push_back(t_end);
        witness.elements.push_back(s_end);
    }
    std::sort(witness.elements.begin(), witness.elements.end());
    if (std::adjacent_find(witness.elements.begin(), witness.elements.end()) !=
        witness.elements.end())
        throw std::logic_error("thread_witness_small: thread endpoints collided");
    return witness;
}

std::vector<ElementRef> thread_witness_general(const GradedPoset& poset, int n, int N,
                                               bool allow_below_threshold) {
    if (n < 1 || n > poset.max_rank())
        throw std::invalid_argument("thread_witness_general: start rank outside truncation");
    if (N > poset.max_rank() || N < n)
        throw std::invalid_argument("thread_witness_general: target rank outside truncation");
    if (N < 4 * n && !allow_below_threshold)
        throw std::invalid_argument(
            "thread_witness_general: the bound needs N >= 4n; "
            "pass allow_below_threshold to explore anyway");
    std::vector<ElementRef> endpoints;
    for (const ElementRef& t : thread_elements(poset, n).elements)
        endpoints.push_back(extend_thread(poset, t, N).elements.back());
    std::sort(endpoints.begin(), endpoints.end());
    if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end())
        throw std::logic_error("thread_witness_general: thread endpoints collided");
    return endpoints;
}

Rat a_bound(int r, int n) {
    if (r < 1 || n < 1) throw std::invalid_argument("a_bound: needs r, n >= 1");
    const BigInt num = BigInt(n) * int_pow(BigInt(r), static_cast<unsigned long>(n)) *
                       factorial(static_cast<unsigned long>(n));
    const BigInt den = int_pow(BigInt(r), static_cast<unsigned long>(3 * n)) *
                       factorial(static_cast<unsigned long>(3 * n));
    return Rat(num, den);
}

PhiBound phi_power(int r, int n) {
    if (r < 1 || n < 0) throw std::invalid_argument("phi_power: needs r >= 1, n >= 0");
    PhiBound out;
    out.r = r;
    out.n = n;
    out.a = 0;
    out.b = 1;
    for (int k = 0; k < n; ++k) {
        const BigInt a_next = r * out.a + out.b;  // phi^{k+1} = a_next*phi + b_next
        out.b = out.a;
        out.a = a_next;
    }
    return out;
}

int quadratic_sign(const Rat& u, const Rat& v, const BigInt& d) {
    if (d <= 0) throw std::invalid_argument("quadratic_sign: d must be positive");
    if (v.is_zero()) return u.sign();
    if (u.is_zero()) return v.sign();
    if (u.sign() == v.sign()) return u.sign();
    // mixed signs: compare u^2 against v^2 d
    const Rat lhs = u * u;
    const Rat rhs = v * v * Rat(d);
    if (lhs == rhs) return 0;
    const bool u_dominates = lhs > rhs;
    return u_dominates ? u.sign() : v.sign();
}

bool le_two_phi_pow(const BigInt& p, int r, int n) {
    const PhiBound pb = phi_power(r, n);
    const BigInt d = BigInt(r) * r + 4;
    // 2 phi^n - p = (a r + 2 b - p) + a sqrt(d)
    const Rat u(pb.a * r + 2 * pb.b - p);
    const Rat v(pb.a);
    return quadratic_sign(u, v, d) >= 0;
}

bool thread_gap_sufficient_condition(int r, int n) {
    const Rat q = a_bound(r, n);
    const PhiBound pb = phi_power(r, n);
    const BigInt d = BigInt(r) * r + 4;
    // 2 phi^n a(r,n) = q(a r + 2 b) + q a sqrt(d); holds iff <= 1/3
    const Rat u = q * Rat(pb.a * r + 2 * pb.b) - Rat(1, 3);
    const Rat v = q * Rat(pb.a);
    return quadratic_sign(u, v, d) <= 0;
}

ClosedFormEntries closed_form_thread_entries(int r, int n) {
    if (r < 1 || n < 2) throw std::invalid_argument("closed_form_thread_entries: needs r >= 1, n >= 2");
    ClosedFormEntries out;
    BigInt denom(1);  // r^k k!
    for (int k = 1; k <= n; ++k) {
        denom *= r * k;
        const Rat term(BigInt(1), denom);
        out.diag += (k % 2 == 1) ? term : -term;
    }
    const Rat low(BigInt(1), int_pow(BigInt(r), static_cast<unsigned long>(n - 1)) *
                                  factorial(static_cast<unsigned long>(n - 1)));
    out.generic = Rat(BigInt(1), int_pow(BigInt(r), static_cast<unsigned long>(n)) *
                                     factorial(static_cast<unsigned long>(n)));
    out.paired = (low - out.generic).abs();
    return out;
}

GrowthBoundReport growth_bound_check(const GradedPoset& poset, int r) {
    if (r < 1) throw std::invalid_argument("growth_bound_check: r must be positive");
    GrowthBoundReport report;
    report.r = r;
    report.ok = true;
    for (int n = 0; n <= poset.max_rank(); ++n) {
        GrowthBoundRow row;
        row.n = n;
        row.p = BigInt(poset.rank_size(n));
        row.z = zr_rank_size(r, n);
        row.le_z = (row.p <= row.z);
        row.le_phi = le_two_phi_pow(row.p, r, n);
        if (!row.le_z || !row.le_phi) report.ok = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

ReplayReport replay_gap_bound(const GradedPoset& poset, int r) {
    if (r < 1) throw std::invalid_argument("replay_gap_bound: r must be positive");
    ReplayReport report;
    report.r = r;
    report.bound = 2 * static_cast<std::uint64_t>(r);
    report.first_applicable_rank = (r == 1) ? 4 : (r == 2) ? 3 : 2;
    report.ok = true;
    for (int n = report.first_applicable_rank; n <= poset.max_rank(); ++n) {
        ReplayRow row;
        row.n = n;
        row.observed_gap = static_cast<std::int64_t>(poset.rank_size(n)) -
                           static_cast<std::int64_t>(poset.rank_size(n - 1));
        row.observed_ok = row.observed_gap >= static_cast<std::int64_t>(report.bound);
        const SmallThreadWitness witness = thread_witness_small(poset, r, n);
        const RatMatrix projection = projection_matrix(poset, r, n);
        row.gershgorin =
            certify_gap(poset, projection, n, witness.elements, CertStrategy::Gershgorin);
        row.determinant =
            certify_gap(poset, projection, n, witness.elements, CertStrategy::Determinant);
        if (!row.observed_ok || !row.certified()) report.ok = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace diffposet
