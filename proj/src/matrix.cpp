#include "diffposet/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffposet {

namespace {
const Rat kZero;

void check_same_shape(const RatMatrix& a, const RatMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}
}  // namespace

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat acc;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

RatMatrix RatMatrix::dense(std::size_t rows, std::size_t cols) {
    RatMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.sparse_ = false;
    m.dense_.assign(rows * cols, Rat());
    return m;
}

RatMatrix RatMatrix::sparse(std::size_t rows, std::size_t cols) {
    RatMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.sparse_ = true;
    m.srows_.assign(rows, {});
    return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m = dense(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

const Rat& RatMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix::at");
    if (!sparse_) return dense_[r * cols_ + c];
    const auto& row = srows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& p, std::size_t col) { return p.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return kZero;
}

void RatMatrix::set(std::size_t r, std::size_t c, Rat v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix::set");
    if (sparse_) throw std::logic_error("RatMatrix::set on sparse storage; use push_sparse");
    dense_[r * cols_ + c] = std::move(v);
}

Rat& RatMatrix::ref(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix::ref");
    if (sparse_) throw std::logic_error("RatMatrix::ref on sparse storage");
    return dense_[r * cols_ + c];
}

void RatMatrix::push_sparse(std::size_t r, std::uint32_t c, Rat v) {
    if (!sparse_) throw std::logic_error("RatMatrix::push_sparse on dense storage");
    if (r >= rows_ || c >= cols_) throw std::out_of_range("RatMatrix::push_sparse");
    auto& row = srows_[r];
    if (!row.empty() && row.back().first >= c)
        throw std::logic_error("RatMatrix::push_sparse: columns must arrive in increasing order");
    if (!v.is_zero()) row.emplace_back(c, std::move(v));
}

RatMatrix RatMatrix::to_dense() const {
    if (!sparse_) return *this;
    RatMatrix m = dense(rows_, cols_);
    m.domain_rank = domain_rank;
    m.codomain_rank = codomain_rank;
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : srows_[r]) m.set(r, c, v);
    return m;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.is_sparse() && b.is_sparse()) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a.sparse_row(r) != b.sparse_row(r)) return false;
        return true;
    }
    if (a.is_sparse() != b.is_sparse()) {
        const RatMatrix& s = a.is_sparse() ? a : b;
        const RatMatrix& d = a.is_sparse() ? b : a;
        for (std::size_t r = 0; r < s.rows(); ++r) {
            std::size_t seen = 0;
            for (const auto& [c, v] : s.sparse_row(r)) {
                if (d.at(r, c) != v) return false;
                ++seen;
            }
            // every dense nonzero must be present in the sparse row
            std::size_t nnz = 0;
            for (std::size_t c = 0; c < d.cols(); ++c)
                if (!d.at(r, c).is_zero()) ++nnz;
            if (nnz != seen) return false;
        }
        return true;
    }
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
    RatMatrix out = RatMatrix::dense(a.rows(), b.cols());
    out.domain_rank = b.domain_rank;
    out.codomain_rank = a.codomain_rank;
    if (a.is_sparse()) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (const auto& [k, av] : a.sparse_row(i)) {
                if (b.is_sparse()) {
                    for (const auto& [j, bv] : b.sparse_row(k))
                        add_mul(out.dense_[i * out.cols_ + j], av, bv);
                } else {
                    for (std::size_t j = 0; j < b.cols(); ++j) {
                        const Rat& bv = b.at(k, j);
                        if (!bv.is_zero()) add_mul(out.dense_[i * out.cols_ + j], av, bv);
                    }
                }
            }
        }
        return out;
    }
    if (b.is_sparse()) {
        for (std::size_t k = 0; k < b.rows(); ++k) {
            const auto& brow = b.sparse_row(k);
            if (brow.empty()) continue;
            for (std::size_t i = 0; i < a.rows(); ++i) {
                const Rat& av = a.at(i, k);
                if (av.is_zero()) continue;
                for (const auto& [j, bv] : brow) add_mul(out.dense_[i * out.cols_ + j], av, bv);
            }
        }
        return out;
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& av = a.at(i, k);
            if (av.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& bv = b.at(k, j);
                if (!bv.is_zero()) add_mul(out.dense_[i * out.cols_ + j], av, bv);
            }
        }
    return out;
}

RatMatrix transpose(const RatMatrix& m) {
    if (m.is_sparse()) {
        RatMatrix out = RatMatrix::sparse(m.cols(), m.rows());
        std::vector<RatMatrix::SparseRow> rows(m.cols());
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (const auto& [c, v] : m.sparse_row(r))
                rows[c].emplace_back(static_cast<std::uint32_t>(r), v);
        out.srows_ = std::move(rows);  // column order inherited from row scan
        out.domain_rank = m.codomain_rank;
        out.codomain_rank = m.domain_rank;
        return out;
    }
    RatMatrix out = RatMatrix::dense(m.cols(), m.rows());
    out.domain_rank = m.codomain_rank;
    out.codomain_rank = m.domain_rank;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m.at(r, c));
    return out;
}

RatMatrix add(const RatMatrix& a, const RatMatrix& b) {
    check_same_shape(a, b, "add");
    RatMatrix out = RatMatrix::dense(a.rows(), a.cols());
    out.domain_rank = a.domain_rank;
    out.codomain_rank = a.codomain_rank;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) + b.at(r, c));
    return out;
}

RatMatrix subtract(const RatMatrix& a, const RatMatrix& b) {
    check_same_shape(a, b, "subtract");
    RatMatrix out = RatMatrix::dense(a.rows(), a.cols());
    out.domain_rank = a.domain_rank;
    out.codomain_rank = a.codomain_rank;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c) - b.at(r, c));
    return out;
}

RatMatrix scale(const RatMatrix& m, const Rat& s) {
    RatMatrix out = m.to_dense();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m.at(r, c) * s);
    return out;
}

Rat trace(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("trace: non-square matrix");
    Rat acc;
    for (std::size_t i = 0; i < m.rows(); ++i) acc += m.at(i, i);
    return acc;
}

bool is_symmetric(const RatMatrix& m) {
    if (!m.is_square()) return false;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = r + 1; c < m.cols(); ++c)
            if (m.at(r, c) != m.at(c, r)) return false;
    return true;
}

Rat determinant(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);
    RatMatrix w = m.to_dense();
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) {
                Rat tmp = w.at(col, c);
                w.set(col, c, w.at(pivot, c));
                w.set(pivot, c, tmp);
            }
            negate = !negate;
        }
        const Rat p = w.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Rat factor = w.at(r, col) / p;
            if (factor.is_zero()) continue;
            w.set(r, col, Rat(0));
            for (std::size_t c = col + 1; c < n; ++c) sub_mul(w.ref(r, c), factor, w.ref(col, c));
        }
    }
    Rat det(1);
    for (std::size_t i = 0; i < n; ++i) det *= w.at(i, i);
    return negate ? -det : det;
}

// Fraction-free Gauss-Jordan (Bareiss/Montante) on the augmented integer
// matrix [L*A | I]: every intermediate is an exact minor, every division is
// exact integer division, and no rational gcd work happens until the final
// entries are formed. Pivots on the first nonzero entry of each column.
RatMatrix invert(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("invert: non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix inv = RatMatrix::dense(n, n);
    inv.domain_rank = m.codomain_rank;
    inv.codomain_rank = m.domain_rank;
    if (n == 0) return inv;

    BigInt common_den(1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Rat& v = m.at(r, c);
            if (!v.is_zero()) mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(),
                                      v.den().get_mpz_t());
        }

    const std::size_t width = 2 * n;
    std::vector<std::vector<BigInt>> w(n, std::vector<BigInt>(width, BigInt(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const Rat& v = m.at(r, c);
            if (!v.is_zero()) w[r][c] = v.num() * (common_den / v.den());
        }
        w[r][n + r] = 1;
    }

    BigInt prev(1), product;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && w[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("invert: singular matrix");
        if (pivot != col) w[pivot].swap(w[col]);
        const BigInt piv = w[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const BigInt factor = w[r][col];
            for (std::size_t c = 0; c < width; ++c) {
                // w[r][c] = (w[r][c]*piv - factor*w[col][c]) / prev, exactly
                w[r][c] *= piv;
                if (factor != 0 && w[col][c] != 0) {
                    product = factor * w[col][c];
                    w[r][c] -= product;
                }
                if (w[r][c] != 0)
                    mpz_divexact(w[r][c].get_mpz_t(), w[r][c].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = piv;
    }
    // row k of the reduced system reads w[k][k] * x = rhs
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (w[r][n + c] != 0) inv.set(r, c, Rat(w[r][n + c] * common_den, w[r][r]));
    return inv;
}

std::size_t matrix_rank(const RatMatrix& m) {
    std::vector<RatMatrix::SparseRow> rows(m.rows());
    if (m.is_sparse()) {
        for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.sparse_row(r);
    } else {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m.at(r, c).is_zero()) rows[r].emplace_back(static_cast<std::uint32_t>(c), m.at(r, c));
    }
    std::vector<bool> active(rows.size(), true);
    std::size_t rank = 0;
    for (;;) {
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r].empty()) continue;
            if (best == rows.size() || rows[r].size() < rows[best].size()) best = r;
        }
        if (best == rows.size()) break;
        const auto pivot_row = rows[best];  // copy: eliminations below mutate rows
        const std::uint32_t pc = pivot_row.front().first;
        const Rat& pv = pivot_row.front().second;
        active[best] = false;
        ++rank;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r]) continue;
            auto& row = rows[r];
            auto it = std::lower_bound(row.begin(), row.end(), pc,
                                       [](const auto& p, std::uint32_t col) { return p.first < col; });
            if (it == row.end() || it->first != pc) continue;
            const Rat factor = it->second / pv;
            RatMatrix::SparseRow merged;
            merged.reserve(row.size() + pivot_row.size());
            auto a = row.begin();
            auto b = pivot_row.begin();
            while (a != row.end() || b != pivot_row.end()) {
                if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == row.end() || b->first < a->first) {
                    merged.emplace_back(b->first, -(factor * b->second));
                    ++b;
                } else {
                    Rat v = a->second - factor * b->second;
                    if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            row = std::move(merged);
        }
    }
    return rank;
}

}  // namespace diffposet
