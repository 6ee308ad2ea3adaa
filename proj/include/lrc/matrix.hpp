#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

// Dense row-major matrix over a runtime field.
struct Mat {
    FieldSpec F;
    int rows = 0, cols = 0;
    std::vector<Fe> data;

    Mat() = default;
    Mat(FieldSpec f, int r, int c) : F(std::move(f)), rows(r), cols(c), data(std::size_t(r) * c, 0) {}

    Fe& at(int i, int j) { return data[std::size_t(i) * cols + j]; }
    Fe at(int i, int j) const { return data[std::size_t(i) * cols + j]; }

    static Mat identity(const FieldSpec& f, int n);
    static Mat from_rows(const FieldSpec& f, const std::vector<std::vector<Fe>>& rows);
    // Binary matrix from strings of '0'/'1'.
    static Mat from_bits(const FieldSpec& f, const std::vector<std::string>& rows);

    std::vector<Fe> row(int i) const;
    Mat transpose() const;
    Mat cols_subset(const std::vector<int>& idx) const;
    Mat rows_subset(const std::vector<int>& idx) const;
    bool operator==(const Mat& o) const {
        return F == o.F && rows == o.rows && cols == o.cols && data == o.data;
    }
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
bool is_zero(const Mat& a);

struct Rref {
    Mat R;                // reduced row echelon form, zero rows removed
    std::vector<int> pivots;
};

Rref mat_rref(const Mat& M);
int mat_rank(const Mat& M);
// Rank of the selected columns.
int rank_of_columns(const Mat& M, const std::vector<int>& cols);
// Basis rows of {x : M x^T = 0}.
Mat mat_nullspace(const Mat& M);
// Basis rows of the row space (rref, zero rows dropped).
Mat row_basis(const Mat& M);
// Solves A x = b; empty optional when inconsistent.
std::optional<std::vector<Fe>> mat_solve(const Mat& A, const std::vector<Fe>& b);
// Errors: DuplicatePoint, InvalidArgument.
Mat vandermonde(const FieldSpec& F, const std::vector<Fe>& points, int rows);

}  // namespace lrc
