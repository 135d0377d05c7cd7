#pragma once

// Exact integer linear algebra: Smith and Hermite normal forms, sublattice
// membership and quotient invariants. Everything is arbitrary precision.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace twgamma {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Thrown for shape or domain violations in the public API.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of big integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    /// Builds from nested rows; all rows must have the same length.
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntMatrix transposed() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += k * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    /// col[dst] += k * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t i);

    Integer determinant() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);

/// U * M * V = S with S diagonal, d1 | d2 | ..., nonzero entries first.
struct SmithDecomposition {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;

    /// Diagonal of S (length min(rows, cols)).
    IntVector diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Row-style Hermite basis of a sublattice of Z^rank.
///
/// Rows are echelon with positive pivots, every entry above a pivot lies in
/// [0, pivot). Two generating sets of the same lattice produce identical bases,
/// so `==` is lattice equality.
class HermiteBasis {
public:
    HermiteBasis() = default;
    explicit HermiteBasis(std::size_t ambient_rank) : rank_(ambient_rank) {}

    std::size_t ambient_rank() const { return rank_; }
    const std::vector<IntVector>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    /// Column index of the pivot of row i.
    std::size_t pivot_column(std::size_t i) const { return pivots_[i]; }

    bool contains(const IntVector& v) const;
    /// Integer coefficients c with v = sum c_i row_i, or nullopt if v is outside the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;
    /// Canonical coset representative of v modulo the lattice.
    IntVector reduce(const IntVector& v) const;

    friend bool operator==(const HermiteBasis&, const HermiteBasis&) = default;

private:
    friend HermiteBasis hermite_normal_form(std::vector<IntVector> rows, std::size_t rank);

    std::size_t rank_ = 0;
    std::vector<IntVector> rows_;
    std::vector<std::size_t> pivots_;
};

HermiteBasis hermite_normal_form(std::vector<IntVector> rows, std::size_t ambient_rank);

bool submodule_membership(const HermiteBasis& lattice, const IntVector& v);

/// Z^r / L presented as Z^free_rank + (+) Z/f_i, f_1 | f_2 | ..., factors of 1 dropped.
struct QuotientInvariants {
    std::size_t free_rank = 0;
    IntVector factors;

    /// Order of the torsion part.
    Integer torsion_order() const;
    friend bool operator==(const QuotientInvariants&, const QuotientInvariants&) = default;
};

std::string to_string(const QuotientInvariants& q);

QuotientInvariants quotient_invariants(std::size_t ambient_rank, const HermiteBasis& lattice);

HermiteBasis lattice_sum(const HermiteBasis& a, const HermiteBasis& b);
bool lattice_equal(const HermiteBasis& a, const HermiteBasis& b);
bool lattice_contains(const HermiteBasis& outer, const HermiteBasis& inner);

/// Outer / inner for nested lattices inner <= outer, with element-level access:
/// each outer vector maps to coordinates in Z^free x (+) Z/f_i.
class LatticeQuotient {
public:
    LatticeQuotient(const HermiteBasis& outer, const HermiteBasis& inner);

    const QuotientInvariants& invariants() const { return invariants_; }
    /// Coordinates of v (which must lie in outer); torsion coordinates reduced.
    IntVector coordinates(const IntVector& v) const;
    /// Additive order of the class of v; 0 when the class has infinite order.
    Integer order(const IntVector& v) const;

private:
    HermiteBasis outer_;
    IntMatrix change_;      // outer coordinates -> Smith coordinates
    IntVector moduli_;      // per Smith coordinate: 0 = free, 1 = trivial, >1 = torsion
    QuotientInvariants invariants_;
};

}  // namespace twgamma
