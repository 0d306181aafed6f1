#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "outf3/errors.hpp"

#include "json.hpp"

namespace outf3::exactlin {

/// Exact rational scalar. GMP keeps fractions reduced with positive
/// denominators once canonicalized; every constructor here canonicalizes.
using Rational = mpq_class;

Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& q);

using Vector = std::vector<Rational>;

/// Dense matrix over the exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(std::vector<std::vector<Rational>> rows);
    static RationalMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    Vector operator*(const Vector& v) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const;
    bool operator!=(const RationalMatrix& rhs) const { return !(*this == rhs); }

    bool is_identity() const;
    bool is_zero() const;
    bool is_integer() const;

    Rational determinant() const;
    /// Inverse, or nullopt when singular.
    std::optional<RationalMatrix> inverse() const;

    /// Block-diagonal juxtaposition.
    static RationalMatrix direct_sum(const RationalMatrix& a, const RationalMatrix& b);

    /// JSON: array of rows, entries as exact "p/q" strings.
    nlohmann::json to_json() const;
    static RationalMatrix from_json(const nlohmann::json& j);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct EchelonForm {
    RationalMatrix matrix;           // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column per surviving row
};

/// Reduced row echelon form with zero rows removed. Canonical: any two
/// row-equivalent inputs produce the same output.
EchelonForm reduced_row_echelon(const RationalMatrix& m);

/// Linear subspace of Q^n, stored as a canonical reduced-row-echelon basis,
/// so equal subspaces compare equal componentwise.
class Subspace {
public:
    explicit Subspace(std::size_t ambient);  // zero subspace
    static Subspace span_of_rows(const RationalMatrix& m);
    static Subspace span_of_vectors(const std::vector<Vector>& vectors, std::size_t ambient);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return basis_.rows(); }
    const RationalMatrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the echelon basis; nullopt when v lies outside.
    std::optional<Vector> coordinates(const Vector& v) const;

    bool operator==(const Subspace& rhs) const;
    bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

private:
    std::size_t ambient_;
    RationalMatrix basis_;  // dimension x ambient, RREF
    std::vector<std::size_t> pivots_;
};

/// Exact null space of m. dim kernel + rank = cols.
Subspace kernel(const RationalMatrix& m);

/// Exact intersection (Zassenhaus). Ambient dimensions must agree.
Subspace intersect(const Subspace& a, const Subspace& b);

/// Subspace sum a + b.
Subspace sum(const Subspace& a, const Subspace& b);

/// Image of a subspace under a matrix (span of the mapped basis).
Subspace apply(const RationalMatrix& m, const Subspace& s);

// ---------------------------------------------------------------------------
// Second symmetric power.
//
// Sym^2 of Q^n has the monomial basis x_a x_b with a <= b, ordered
// lexicographically; for n = 3 that is (11, 12, 13, 22, 23, 33). This
// ordering is fixed project-wide: the eigenspace and submodule computations
// depend on it.
// ---------------------------------------------------------------------------

std::size_t sym2_dimension(std::size_t n);
/// Index of the monomial x_a x_b (0-based, a <= b) in the fixed ordering.
std::size_t sym2_index(std::size_t n, std::size_t a, std::size_t b);
/// Inverse of sym2_index.
std::pair<std::size_t, std::size_t> sym2_monomial(std::size_t n, std::size_t index);

/// The functor Sym^2 on a square matrix: the monomial x_a x_b maps to
/// (m x_a)(m x_b), expanded in monomial coordinates. Multiplicative:
/// sym2_map(a*b) == sym2_map(a)*sym2_map(b).
RationalMatrix sym2_map(const RationalMatrix& m);

}  // namespace outf3::exactlin
