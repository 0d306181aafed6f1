#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outf3/errors.hpp"
#include "outf3/exact_linear.hpp"

namespace outf3 {

/// Small dense integer matrix. Used for abelianized automorphisms, where all
/// products stay far below 64-bit range.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    long long& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    long long at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;
    bool operator!=(const IntMatrix& rhs) const { return !(*this == rhs); }

    bool is_identity() const;
    long long determinant() const;

    /// Inverse of a matrix with determinant +-1 (integer entries).
    IntMatrix inverse_unimodular() const;

    bool congruent_identity_mod(long long modulus) const;

    exactlin::RationalMatrix to_rational() const;
    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<long long> entries_;
};

}  // namespace outf3
