#include "twgamma/exact_lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace twgamma {

namespace {

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Floor division for big integers.
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer trunc_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

void axpy(IntVector& y, const Integer& k, const IntVector& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += k * x[i];
}

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("IntMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    IntMatrix m(rows.size(), cols);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols) throw Error("IntMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (long x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    IntMatrix a = *this;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw Error("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVector operator*(const IntVector& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw Error("vector-matrix product: shape mismatch");
    IntVector out(m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << to_string(m.row(i));
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

IntVector SmithDecomposition::diagonal() const {
    IntVector d;
    for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    SmithDecomposition out{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& S = out.S;
    IntMatrix& U = out.U;
    IntMatrix& V = out.V;

    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        for (;;) {
            // Minimal-absolute-value pivot in the trailing block.
            std::size_t pi = r, pj = c;
            Integer best;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    if (S(i, j) == 0) continue;
                    if (pi == r || abs_of(S(i, j)) < best) {
                        best = abs_of(S(i, j));
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == r) return out;  // trailing block is zero

            S.swap_rows(t, pi);
            U.swap_rows(t, pi);
            S.swap_cols(t, pj);
            V.swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (S(i, t) == 0) continue;
                Integer q = -trunc_div(S(i, t), S(t, t));
                S.add_row_multiple(i, t, q);
                U.add_row_multiple(i, t, q);
                if (S(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (S(t, j) == 0) continue;
                Integer q = -trunc_div(S(t, j), S(t, t));
                S.add_col_multiple(j, t, q);
                V.add_col_multiple(j, t, q);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the rest of the block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
                        S.add_row_multiple(t, i, Integer(1));
                        U.add_row_multiple(t, i, Integer(1));
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (S(t, t) < 0) {
            S.negate_row(t);
            U.negate_row(t);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteBasis hermite_normal_form(std::vector<IntVector> rows, std::size_t ambient_rank) {
    for (const auto& v : rows)
        if (v.size() != ambient_rank) throw Error("hermite_normal_form: vector length mismatch");
    std::erase_if(rows, is_zero);

    HermiteBasis h(ambient_rank);
    std::size_t k = 0;  // rows [0, k) are finished
    for (std::size_t col = 0; col < ambient_rank && k < rows.size(); ++col) {
        for (;;) {
            std::size_t p = rows.size();
            for (std::size_t i = k; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (p == rows.size() || abs_of(rows[i][col]) < abs_of(rows[p][col])) p = i;
            }
            if (p == rows.size()) break;
            std::swap(rows[k], rows[p]);
            bool done = true;
            for (std::size_t i = k + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                Integer q = -floor_div(rows[i][col], rows[k][col]);
                axpy(rows[i], q, rows[k]);
                if (rows[i][col] != 0) done = false;
            }
            if (done) {
                if (rows[k][col] < 0)
                    for (auto& x : rows[k]) x = -x;
                h.pivots_.push_back(col);
                ++k;
                break;
            }
        }
    }
    rows.resize(k);

    // Reduce entries above each pivot into [0, pivot).
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t col = h.pivots_[i];
        for (std::size_t j = 0; j < i; ++j) {
            Integer q = -floor_div(rows[j][col], rows[i][col]);
            axpy(rows[j], q, rows[i]);
        }
    }
    h.rows_ = std::move(rows);
    return h;
}

std::optional<IntVector> HermiteBasis::coordinates(const IntVector& v) const {
    if (v.size() != rank_) throw Error("HermiteBasis: vector length mismatch");
    IntVector rest = v;
    IntVector coeffs(rows_.size(), Integer(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t col = pivots_[i];
        // Entries left of this pivot must already be cleared.
        for (std::size_t j = (i == 0 ? 0 : pivots_[i - 1] + 1); j < col; ++j)
            if (rest[j] != 0) return std::nullopt;
        if (!mpz_divisible_p(rest[col].get_mpz_t(), rows_[i][col].get_mpz_t())) return std::nullopt;
        Integer q;
        mpz_divexact(q.get_mpz_t(), rest[col].get_mpz_t(), rows_[i][col].get_mpz_t());
        coeffs[i] = q;
        axpy(rest, Integer(-q), rows_[i]);
    }
    if (!is_zero(rest)) return std::nullopt;
    return coeffs;
}

bool HermiteBasis::contains(const IntVector& v) const { return coordinates(v).has_value(); }

IntVector HermiteBasis::reduce(const IntVector& v) const {
    if (v.size() != rank_) throw Error("HermiteBasis: vector length mismatch");
    IntVector out = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t col = pivots_[i];
        Integer q = -floor_div(out[col], rows_[i][col]);
        axpy(out, q, rows_[i]);
    }
    return out;
}

bool submodule_membership(const HermiteBasis& lattice, const IntVector& v) { return lattice.contains(v); }

// ---------------------------------------------------------------------------
// Quotients

Integer QuotientInvariants::torsion_order() const {
    Integer n = 1;
    for (const auto& f : factors) n *= f;
    return n;
}

std::string to_string(const QuotientInvariants& q) {
    std::ostringstream os;
    bool first = true;
    if (q.free_rank > 0) {
        os << "Z";
        if (q.free_rank > 1) os << "^" << q.free_rank;
        first = false;
    }
    for (const auto& f : q.factors) {
        os << (first ? "" : " + ") << "Z/" << f;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

QuotientInvariants invariants_of(std::size_t rank, const IntMatrix& relations) {
    QuotientInvariants q;
    std::size_t nonzero = 0;
    if (relations.rows() > 0) {
        for (const auto& d : smith_normal_form(relations).diagonal()) {
            if (d == 0) continue;
            ++nonzero;
            if (d != 1) q.factors.push_back(d);
        }
    }
    q.free_rank = rank - nonzero;
    return q;
}

}  // namespace

QuotientInvariants quotient_invariants(std::size_t ambient_rank, const HermiteBasis& lattice) {
    if (lattice.ambient_rank() != ambient_rank) throw Error("quotient_invariants: rank mismatch");
    return invariants_of(ambient_rank, IntMatrix::from_rows(lattice.rows(), ambient_rank));
}

HermiteBasis lattice_sum(const HermiteBasis& a, const HermiteBasis& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw Error("lattice_sum: rank mismatch");
    std::vector<IntVector> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return hermite_normal_form(std::move(rows), a.ambient_rank());
}

bool lattice_equal(const HermiteBasis& a, const HermiteBasis& b) {
    if (a.ambient_rank() != b.ambient_rank()) throw Error("lattice_equal: rank mismatch");
    return a == b;
}

bool lattice_contains(const HermiteBasis& outer, const HermiteBasis& inner) {
    if (outer.ambient_rank() != inner.ambient_rank()) throw Error("lattice_contains: rank mismatch");
    return std::all_of(inner.rows().begin(), inner.rows().end(),
                       [&](const IntVector& v) { return outer.contains(v); });
}

LatticeQuotient::LatticeQuotient(const HermiteBasis& outer, const HermiteBasis& inner) : outer_(outer) {
    if (outer.ambient_rank() != inner.ambient_rank()) throw Error("LatticeQuotient: rank mismatch");
    const std::size_t r = outer.size();
    std::vector<IntVector> coords;
    for (const auto& v : inner.rows()) {
        auto c = outer.coordinates(v);
        if (!c) throw Error("LatticeQuotient: inner lattice is not contained in outer lattice");
        coords.push_back(std::move(*c));
    }
    moduli_.assign(r, Integer(0));
    if (coords.empty() || r == 0) {
        change_ = IntMatrix::identity(r);
    } else {
        SmithDecomposition snf = smith_normal_form(IntMatrix::from_rows(coords, r));
        change_ = snf.V;
        auto diag = snf.diagonal();
        for (std::size_t j = 0; j < diag.size(); ++j) moduli_[j] = diag[j];
    }
    for (const auto& m : moduli_) {
        if (m == 0)
            ++invariants_.free_rank;
        else if (m != 1)
            invariants_.factors.push_back(m);
    }
}

IntVector LatticeQuotient::coordinates(const IntVector& v) const {
    auto c = outer_.coordinates(v);
    if (!c) throw Error("LatticeQuotient: vector is not in the outer lattice");
    IntVector y = *c * change_;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (moduli_[j] == 0) continue;
        Integer t;
        mpz_fdiv_r(t.get_mpz_t(), y[j].get_mpz_t(), moduli_[j].get_mpz_t());
        y[j] = t;
    }
    return y;
}

Integer LatticeQuotient::order(const IntVector& v) const {
    IntVector y = coordinates(v);
    Integer result = 1;
    for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        if (moduli_[j] == 0) return 0;
        Integer g = gcd(y[j], moduli_[j]);
        Integer o = moduli_[j] / g;
        result = lcm(result, o);
    }
    return result;
}

}  // namespace twgamma
