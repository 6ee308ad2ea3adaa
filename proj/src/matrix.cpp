#include "lrc/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace lrc {

namespace {

using Word = std::uint64_t;

struct BitRows {
    int cols = 0, words = 0;
    std::vector<std::vector<Word>> rows;
};

BitRows pack(const Mat& M) {
    BitRows b;
    b.cols = M.cols;
    b.words = (M.cols + 63) / 64;
    b.rows.assign(M.rows, std::vector<Word>(b.words, 0));
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
            if (M.at(i, j)) b.rows[i][j >> 6] |= Word(1) << (j & 63);
    return b;
}

// In-place GF(2) reduction to RREF; returns pivot columns, rows reordered.
std::vector<int> bit_rref(BitRows& b) {
    std::vector<int> piv;
    int r = 0;
    const int n = static_cast<int>(b.rows.size());
    for (int c = 0; c < b.cols && r < n; ++c) {
        const int w = c >> 6;
        const Word bit = Word(1) << (c & 63);
        int sel = -1;
        for (int i = r; i < n; ++i)
            if (b.rows[i][w] & bit) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(b.rows[r], b.rows[sel]);
        for (int i = 0; i < n; ++i)
            if (i != r && (b.rows[i][w] & bit))
                for (int k = w; k < b.words; ++k) b.rows[i][k] ^= b.rows[r][k];
        piv.push_back(c);
        ++r;
    }
    b.rows.resize(r);
    return piv;
}

int bit_rank(BitRows b) {
    int r = 0;
    const int n = static_cast<int>(b.rows.size());
    for (int c = 0; c < b.cols && r < n; ++c) {
        const int w = c >> 6;
        const Word bit = Word(1) << (c & 63);
        int sel = -1;
        for (int i = r; i < n; ++i)
            if (b.rows[i][w] & bit) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(b.rows[r], b.rows[sel]);
        for (int i = r + 1; i < n; ++i)
            if (b.rows[i][w] & bit)
                for (int k = w; k < b.words; ++k) b.rows[i][k] ^= b.rows[r][k];
        ++r;
    }
    return r;
}

Rref generic_rref(const Mat& M) {
    const FieldSpec& F = M.F;
    Mat A = M;
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < A.cols && r < A.rows; ++c) {
        int sel = -1;
        for (int i = r; i < A.rows; ++i)
            if (A.at(i, c)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < A.cols; ++j) std::swap(A.at(r, j), A.at(sel, j));
        const Fe inv = F.inv(A.at(r, c));
        for (int j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), inv);
        for (int i = 0; i < A.rows; ++i) {
            if (i == r) continue;
            const Fe f = A.at(i, c);
            if (!f) continue;
            const Fe nf = F.neg(f);
            for (int j = c; j < A.cols; ++j)
                if (A.at(r, j)) A.at(i, j) = F.add(A.at(i, j), F.mul(nf, A.at(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    A.rows = r;
    A.data.resize(std::size_t(r) * A.cols);
    return {A, piv};
}

}  // namespace

Mat Mat::identity(const FieldSpec& f, int n) {
    Mat I(f, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

Mat Mat::from_rows(const FieldSpec& f, const std::vector<std::vector<Fe>>& rws) {
    const int r = static_cast<int>(rws.size());
    const int c = r ? static_cast<int>(rws[0].size()) : 0;
    Mat M(f, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rws[i].size()) != c) throw Error("InvalidArgument", "ragged matrix rows");
        for (int j = 0; j < c; ++j) {
            if (!f.valid(rws[i][j])) throw Error("InvalidArgument", "entry outside field");
            M.at(i, j) = rws[i][j];
        }
    }
    return M;
}

Mat Mat::from_bits(const FieldSpec& f, const std::vector<std::string>& rws) {
    std::vector<std::vector<Fe>> v;
    for (const auto& s : rws) {
        std::vector<Fe> row;
        for (char ch : s) row.push_back(ch == '1' ? 1 : 0);
        v.push_back(row);
    }
    return from_rows(f, v);
}

std::vector<Fe> Mat::row(int i) const {
    return {data.begin() + std::size_t(i) * cols, data.begin() + std::size_t(i + 1) * cols};
}

Mat Mat::transpose() const {
    Mat T(F, cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
    Mat S(F, rows, static_cast<int>(idx.size()));
    for (int i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) S.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return S;
}

Mat Mat::rows_subset(const std::vector<int>& idx) const {
    Mat S(F, static_cast<int>(idx.size()), cols);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (int j = 0; j < cols; ++j) S.at(static_cast<int>(i), j) = at(idx[i], j);
    return S;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw Error("InvalidArgument", "dimension mismatch in product");
    Mat c(a.F, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Fe x = a.at(i, k);
            if (!x) continue;
            for (int j = 0; j < b.cols; ++j)
                if (b.at(k, j)) c.at(i, j) = a.F.add(c.at(i, j), a.F.mul(x, b.at(k, j)));
        }
    return c;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows != b.rows) throw Error("InvalidArgument", "row mismatch in hstack");
    Mat c(a.F, a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
    }
    return c;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols != b.cols) throw Error("InvalidArgument", "column mismatch in vstack");
    Mat c(a.F, a.rows + b.rows, a.cols);
    std::copy(a.data.begin(), a.data.end(), c.data.begin());
    std::copy(b.data.begin(), b.data.end(), c.data.begin() + a.data.size());
    return c;
}

bool is_zero(const Mat& a) {
    return std::all_of(a.data.begin(), a.data.end(), [](Fe x) { return x == 0; });
}

Rref mat_rref(const Mat& M) {
    if (M.F.q() == 2) {
        BitRows b = pack(M);
        auto piv = bit_rref(b);
        Mat R(M.F, static_cast<int>(b.rows.size()), M.cols);
        for (int i = 0; i < R.rows; ++i)
            for (int j = 0; j < M.cols; ++j) R.at(i, j) = (b.rows[i][j >> 6] >> (j & 63)) & 1;
        return {R, piv};
    }
    return generic_rref(M);
}

int mat_rank(const Mat& M) {
    if (M.rows == 0 || M.cols == 0) return 0;
    if (M.F.q() == 2) return bit_rank(pack(M));
    return static_cast<int>(generic_rref(M).pivots.size());
}

int rank_of_columns(const Mat& M, const std::vector<int>& cols) { return mat_rank(M.cols_subset(cols)); }

Mat mat_nullspace(const Mat& M) {
    const auto [R, piv] = mat_rref(M);
    std::vector<char> is_piv(M.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<int> free;
    for (int c = 0; c < M.cols; ++c)
        if (!is_piv[c]) free.push_back(c);
    Mat N(M.F, static_cast<int>(free.size()), M.cols);
    for (std::size_t f = 0; f < free.size(); ++f) {
        const int fc = free[f];
        N.at(static_cast<int>(f), fc) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i)
            N.at(static_cast<int>(f), piv[i]) = M.F.neg(R.at(static_cast<int>(i), fc));
    }
    return N;
}

Mat row_basis(const Mat& M) { return mat_rref(M).R; }

std::optional<std::vector<Fe>> mat_solve(const Mat& A, const std::vector<Fe>& b) {
    if (static_cast<int>(b.size()) != A.rows) throw Error("InvalidArgument", "rhs length mismatch");
    Mat aug(A.F, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    const auto [R, piv] = generic_rref(aug);
    std::vector<Fe> x(A.cols, 0);
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] == A.cols) return std::nullopt;
        x[piv[i]] = R.at(static_cast<int>(i), A.cols);
    }
    return x;
}

Mat vandermonde(const FieldSpec& F, const std::vector<Fe>& points, int rows) {
    std::set<Fe> seen;
    for (Fe x : points) {
        if (!F.valid(x)) throw Error("InvalidArgument", "point outside field");
        if (!seen.insert(x).second) throw Error("DuplicatePoint", "evaluation points must be distinct");
    }
    if (rows < 0 || rows > static_cast<int>(points.size()))
        throw Error("InvalidArgument", "rows must not exceed the number of points");
    Mat V(F, rows, static_cast<int>(points.size()));
    for (int j = 0; j < V.cols; ++j) {
        Fe v = 1;
        for (int i = 0; i < rows; ++i) {
            V.at(i, j) = v;
            v = F.mul(v, points[j]);
        }
    }
    return V;
}

}  // namespace lrc
