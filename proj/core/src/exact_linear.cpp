#include "outf3/exact_linear.hpp"

#include <algorithm>
#include <sstream>

namespace outf3::exactlin {

Rational rational_from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ParseError("not a rational: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw PreconditionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw PreconditionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vector RationalMatrix::row(std::size_t r) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

Vector RationalMatrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw PreconditionError("matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Vector RationalMatrix::operator*(const Vector& v) const {
    if (v.size() != cols_)
        throw PreconditionError("matrix-vector shape mismatch");
    Vector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw PreconditionError("matrix sum shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw PreconditionError("matrix difference shape mismatch");
    RationalMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

bool RationalMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
}

bool RationalMatrix::is_integer() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& q) { return q.get_den() == 1; });
}

Rational RationalMatrix::determinant() const {
    if (!is_square())
        throw PreconditionError("determinant of non-square matrix");
    RationalMatrix m = *this;
    Rational det(1);
    for (std::size_t col = 0; col < m.cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < m.rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows_) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < m.cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t i = col + 1; i < m.rows_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) / m.at(col, col);
            for (std::size_t j = col; j < m.cols_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (!is_square())
        throw PreconditionError("inverse of non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix work(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work.at(i, j) = at(i, j);
        work.at(i, n + i) = 1;
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = row;
        while (pivot < n && work.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != row)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(work.at(pivot, j), work.at(row, j));
        Rational inv = 1 / work.at(row, col);
        for (std::size_t j = 0; j < 2 * n; ++j) work.at(row, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || work.at(i, col) == 0) continue;
            Rational f = work.at(i, col);
            for (std::size_t j = 0; j < 2 * n; ++j) work.at(i, j) -= f * work.at(row, j);
        }
        ++row;
    }
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = work.at(i, n + j);
    return out;
}

RationalMatrix RationalMatrix::direct_sum(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

nlohmann::json RationalMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < rows_; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < cols_; ++j) row.push_back(rational_to_string(at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalMatrix RationalMatrix::from_json(const nlohmann::json& j) {
    if (!j.is_array())
        throw ParseError("matrix JSON must be an array of rows");
    std::vector<std::vector<Rational>> rows;
    for (const auto& jrow : j) {
        if (!jrow.is_array())
            throw ParseError("matrix row must be an array");
        std::vector<Rational> row;
        for (const auto& cell : jrow) {
            if (cell.is_string())
                row.push_back(rational_from_string(cell.get<std::string>()));
            else if (cell.is_number_integer())
                row.push_back(Rational(cell.get<long>()));
            else
                throw ParseError("matrix entry must be a \"p/q\" string or integer");
        }
        rows.push_back(std::move(row));
    }
    return from_rows(std::move(rows));
}

std::string RationalMatrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << " ";
            out << rational_to_string(at(i, j));
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    return out.str();
}

EchelonForm reduced_row_echelon(const RationalMatrix& input) {
    RationalMatrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        Rational inv = 1 / m.at(row, col);
        for (std::size_t j = col; j < cols; ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    RationalMatrix trimmed(pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) trimmed.at(i, j) = m.at(i, j);
    return EchelonForm{std::move(trimmed), std::move(pivots)};
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span_of_rows(const RationalMatrix& m) {
    EchelonForm ef = reduced_row_echelon(m);
    Subspace s(m.cols());
    s.basis_ = std::move(ef.matrix);
    s.pivots_ = std::move(ef.pivots);
    return s;
}

Subspace Subspace::span_of_vectors(const std::vector<Vector>& vectors, std::size_t ambient) {
    RationalMatrix m(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient)
            throw PreconditionError("vector length does not match ambient dimension");
        for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
    }
    return span_of_rows(m);
}

Subspace Subspace::full(std::size_t ambient) {
    return span_of_rows(RationalMatrix::identity(ambient));
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
    if (v.size() != ambient_)
        throw PreconditionError("vector length does not match ambient dimension");
    Vector residual = v;
    Vector coords(dimension(), Rational(0));
    for (std::size_t k = 0; k < dimension(); ++k) {
        coords[k] = residual[pivots_[k]];
        if (coords[k] == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) residual[j] -= coords[k] * basis_.at(k, j);
    }
    for (const Rational& q : residual)
        if (q != 0) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vector& v) const {
    return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw PreconditionError("ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dimension(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

Subspace kernel(const RationalMatrix& m) {
    EchelonForm ef = reduced_row_echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : ef.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v(n, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r)
            v[ef.pivots[r]] = -ef.matrix.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return Subspace::span_of_vectors(basis, n);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw PreconditionError("ambient dimension mismatch in intersection");
    const std::size_t n = a.ambient();
    // Zassenhaus: reduce [A A; B 0]; rows with zero left half carry the
    // intersection in their right half.
    RationalMatrix block(a.dimension() + b.dimension(), 2 * n);
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (std::size_t i = 0; i < b.dimension(); ++i)
        for (std::size_t j = 0; j < n; ++j) block.at(a.dimension() + i, j) = b.basis().at(i, j);

    EchelonForm ef = reduced_row_echelon(block);
    std::vector<Vector> inter;
    for (std::size_t i = 0; i < ef.matrix.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (ef.matrix.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        Vector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = ef.matrix.at(i, n + j);
        inter.push_back(std::move(v));
    }
    return Subspace::span_of_vectors(inter, n);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw PreconditionError("ambient dimension mismatch in sum");
    RationalMatrix stacked(a.dimension() + b.dimension(), a.ambient());
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j) stacked.at(i, j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dimension(); ++i)
        for (std::size_t j = 0; j < b.ambient(); ++j)
            stacked.at(a.dimension() + i, j) = b.basis().at(i, j);
    return Subspace::span_of_rows(stacked);
}

Subspace apply(const RationalMatrix& m, const Subspace& s) {
    if (m.cols() != s.ambient())
        throw PreconditionError("matrix does not act on this ambient space");
    std::vector<Vector> mapped;
    for (std::size_t i = 0; i < s.dimension(); ++i) mapped.push_back(m * s.basis().row(i));
    return Subspace::span_of_vectors(mapped, m.rows());
}

std::size_t sym2_dimension(std::size_t n) {
    return n * (n + 1) / 2;
}

std::size_t sym2_index(std::size_t n, std::size_t a, std::size_t b) {
    if (a > b || b >= n)
        throw PreconditionError("bad monomial index");
    return a * n - a * (a - 1) / 2 + (b - a);
}

std::pair<std::size_t, std::size_t> sym2_monomial(std::size_t n, std::size_t index) {
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t block = n - a;
        if (index < block) return {a, a + index};
        index -= block;
    }
    throw PreconditionError("monomial index out of range");
}

RationalMatrix sym2_map(const RationalMatrix& m) {
    if (!m.is_square())
        throw PreconditionError("sym2_map requires a square matrix");
    const std::size_t n = m.rows();
    const std::size_t d = sym2_dimension(n);
    RationalMatrix out(d, d);
    for (std::size_t col = 0; col < d; ++col) {
        auto [i, j] = sym2_monomial(n, col);
        Vector u = m.column(i);
        Vector w = m.column(j);
        for (std::size_t a = 0; a < n; ++a) {
            if (u[a] != 0 && w[a] != 0) out.at(sym2_index(n, a, a), col) += u[a] * w[a];
            for (std::size_t b = a + 1; b < n; ++b) {
                Rational coeff = u[a] * w[b] + u[b] * w[a];
                if (coeff != 0) out.at(sym2_index(n, a, b), col) += coeff;
            }
        }
    }
    return out;
}

}  // namespace outf3::exactlin
