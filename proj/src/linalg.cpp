#include "diffposet/linalg.hpp"

#include <stdexcept>
#include <string>

namespace diffposet {

RatMatrix operator_matrix(const GradedPoset& poset, int n, Direction direction) {
    if (direction == Direction::Up) {
        if (n < 0 || n >= poset.max_rank())
            throw std::out_of_range("operator_matrix: up operator needs 0 <= n < max_rank");
        RatMatrix m = RatMatrix::sparse(poset.rank_size(n + 1), poset.rank_size(n));
        m.domain_rank = n;
        m.codomain_rank = n + 1;
        // fill row-wise: row y lists the elements it covers
        for (std::uint32_t y = 0; y < poset.rank_size(n + 1); ++y)
            for (std::uint32_t x : poset.down(n + 1, y)) m.push_sparse(y, x, Rat(1));
        return m;
    }
    if (n < 1 || n > poset.max_rank())
        throw std::out_of_range("operator_matrix: down operator needs 1 <= n <= max_rank");
    RatMatrix m = RatMatrix::sparse(poset.rank_size(n - 1), poset.rank_size(n));
    m.domain_rank = n;
    m.codomain_rank = n - 1;
    for (std::uint32_t z = 0; z < poset.rank_size(n - 1); ++z)
        for (std::uint32_t x : poset.up(n - 1, z)) m.push_sparse(z, x, Rat(1));
    return m;
}

RatMatrix du_matrix(const GradedPoset& poset, int n) {
    if (n < 0 || n + 1 > poset.max_rank())
        throw std::out_of_range("du_matrix: needs n + 1 <= max_rank");
    const std::uint32_t pn = poset.rank_size(n);
    RatMatrix m = RatMatrix::dense(pn, pn);
    m.domain_rank = n;
    m.codomain_rank = n;
    for (std::uint32_t z = 0; z < poset.rank_size(n + 1); ++z) {
        const auto& below = poset.down(n + 1, z);
        for (std::uint32_t a : below)
            for (std::uint32_t b : below) m.set(a, b, m.at(a, b) + Rat(1));
    }
    return m;
}

RatMatrix du_inverse_direct(const GradedPoset& poset, int n) {
    try {
        return invert(du_matrix(poset, n));
    } catch (const std::domain_error&) {
        throw std::domain_error("du_inverse_direct: not differential at rank " + std::to_string(n));
    }
}

std::vector<std::vector<BigInt>> descent_counts(const GradedPoset& poset, ElementRef x, int depth) {
    if (!poset.contains(x)) throw std::out_of_range("descent_counts: element outside truncation");
    if (depth < 0 || depth > x.rank) throw std::invalid_argument("descent_counts: bad depth");
    std::vector<std::vector<BigInt>> counts;
    counts.emplace_back(poset.rank_size(x.rank), BigInt(0));
    counts[0][x.index] = 1;
    for (int k = 1; k <= depth; ++k) {
        const int from_rank = x.rank - k + 1;
        std::vector<BigInt> next(poset.rank_size(from_rank - 1), BigInt(0));
        const auto& prev = counts.back();
        for (std::uint32_t w = 0; w < prev.size(); ++w) {
            if (prev[w] == 0) continue;
            for (std::uint32_t z : poset.down(from_rank, w)) next[z] += prev[w];
        }
        counts.push_back(std::move(next));
    }
    return counts;
}

BigInt descent_dot(const GradedPoset& poset, ElementRef x, ElementRef y, int k) {
    if (x.rank != y.rank) throw std::invalid_argument("descent_dot: rank mismatch");
    const auto cx = descent_counts(poset, x, k);
    const auto cy = descent_counts(poset, y, k);
    BigInt acc(0);
    for (std::size_t z = 0; z < cx[static_cast<std::size_t>(k)].size(); ++z)
        acc += cx[static_cast<std::size_t>(k)][z] * cy[static_cast<std::size_t>(k)][z];
    return acc;
}

RatMatrix du_inverse_series(const GradedPoset& poset, int r, int n) {
    if (r < 1) throw std::invalid_argument("du_inverse_series: r must be positive");
    if (n < 1 || n > poset.max_rank())
        throw std::out_of_range("du_inverse_series: needs 1 <= n <= max_rank");
    const int m_rank = n - 1;  // the operator inverted acts on QP_{n-1}
    const std::uint32_t p = poset.rank_size(m_rank);

    std::vector<std::vector<std::vector<BigInt>>> profiles;
    profiles.reserve(p);
    for (std::uint32_t i = 0; i < p; ++i)
        profiles.push_back(descent_counts(poset, {m_rank, i}, m_rank));

    RatMatrix out = RatMatrix::dense(p, p);
    out.domain_rank = m_rank;
    out.codomain_rank = m_rank;
    BigInt denom(r);  // r^{k+1} (k+1)!
    for (int k = 0; k <= m_rank; ++k) {
        const Rat coeff = (k % 2 == 0) ? Rat(BigInt(1), denom) : -Rat(BigInt(1), denom);
        const auto level = static_cast<std::size_t>(k);
        for (std::uint32_t i = 0; i < p; ++i)
            for (std::uint32_t j = i; j < p; ++j) {
                BigInt gram(0);
                for (std::size_t z = 0; z < profiles[i][level].size(); ++z)
                    gram += profiles[i][level][z] * profiles[j][level][z];
                if (gram == 0) continue;
                const Rat term = coeff * Rat(gram);
                out.set(i, j, out.at(i, j) + term);
                if (i != j) out.set(j, i, out.at(j, i) + term);
            }
        denom *= r * (k + 2);
    }
    return out;
}

RatMatrix projection_matrix(const GradedPoset& poset, int r, int n) {
    if (r < 1) throw std::invalid_argument("projection_matrix: r must be positive");
    if (n < 1 || n > poset.max_rank())
        throw std::out_of_range("projection_matrix: needs 1 <= n <= max_rank");
    const RatMatrix up = operator_matrix(poset, n - 1, Direction::Up);
    const RatMatrix down = operator_matrix(poset, n, Direction::Down);
    const RatMatrix inverse = du_inverse_direct(poset, n - 1);
    RatMatrix m = multiply(multiply(up, inverse), down);
    m.domain_rank = n;
    m.codomain_rank = n;
    return m;
}

Rat m_entry_via_paths(const GradedPoset& poset, int r, ElementRef x, ElementRef y) {
    if (r < 1) throw std::invalid_argument("m_entry_via_paths: r must be positive");
    if (!poset.contains(x) || !poset.contains(y))
        throw std::out_of_range("m_entry_via_paths: element outside truncation");
    if (x.rank != y.rank) throw std::invalid_argument("m_entry_via_paths: rank mismatch");
    if (x.rank < 1) throw std::invalid_argument("m_entry_via_paths: rank must be >= 1");
    const int n = x.rank;
    const auto cx = descent_counts(poset, x, n);
    const auto cy = descent_counts(poset, y, n);
    Rat sum;
    BigInt denom(1);  // r^k k!
    for (int k = 1; k <= n; ++k) {
        denom *= r * k;
        BigInt gram(0);
        const auto level = static_cast<std::size_t>(k);
        for (std::size_t z = 0; z < cx[level].size(); ++z) gram += cx[level][z] * cy[level][z];
        if (gram == 0) continue;
        const Rat term(gram, denom);
        sum += (k % 2 == 1) ? term : -term;
    }
    return sum;
}

RatVector e_vector(const GradedPoset& poset, int n) {
    if (n < 0 || n > poset.max_rank()) throw std::out_of_range("e_vector: rank outside truncation");
    std::vector<BigInt> counts{BigInt(1)};
    for (int k = 1; k <= n; ++k) {
        std::vector<BigInt> next(poset.rank_size(k), BigInt(0));
        for (std::uint32_t x = 0; x < poset.rank_size(k); ++x)
            for (std::uint32_t z : poset.down(k, x)) next[x] += counts[z];
        counts = std::move(next);
    }
    RatVector out;
    out.rank = n;
    for (const BigInt& c : counts) out.entries.emplace_back(c);
    return out;
}

SumOfSquaresCheck sum_of_squares_check(const GradedPoset& poset, int r, int n) {
    if (r < 1) throw std::invalid_argument("sum_of_squares_check: r must be positive");
    if (n < 0 || n > poset.max_rank())
        throw std::out_of_range("sum_of_squares_check: rank outside truncation");
    SumOfSquaresCheck check;
    check.lhs = 0;
    const RatVector e = e_vector(poset, n);
    for (const Rat& v : e.entries) check.lhs += v.num() * v.num();
    check.rhs = int_pow(BigInt(r), static_cast<unsigned long>(n)) *
                factorial(static_cast<unsigned long>(n));
    check.ok = (check.lhs == check.rhs);
    return check;
}

}  // namespace diffposet
