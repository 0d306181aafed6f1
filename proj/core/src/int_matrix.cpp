#include "outf3/int_matrix.hpp"

#include <sstream>

namespace outf3 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw PreconditionError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw PreconditionError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const long long a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

long long IntMatrix::determinant() const {
    exactlin::Rational det = to_rational().determinant();
    if (det.get_den() != 1)
        throw Error("integer determinant came out fractional");
    return static_cast<long long>(det.get_num().get_si());
}

IntMatrix IntMatrix::inverse_unimodular() const {
    auto inv = to_rational().inverse();
    if (!inv)
        throw PreconditionError("matrix is singular");
    if (!inv->is_integer())
        throw PreconditionError("matrix is not unimodular");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = static_cast<long long>(inv->at(i, j).get_num().get_si());
    return out;
}

bool IntMatrix::congruent_identity_mod(long long modulus) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            long long want = i == j ? 1 : 0;
            if (((at(i, j) - want) % modulus + modulus) % modulus != 0) return false;
        }
    return true;
}

exactlin::RationalMatrix IntMatrix::to_rational() const {
    exactlin::RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = static_cast<long>(at(i, j));
    return m;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << " ";
            out << at(i, j);
        }
        out << "]";
        if (i + 1 < rows_) out << "\n";
    }
    return out.str();
}

}  // namespace outf3
