#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/matrix.hpp"

namespace lrc {

// Declared parameters; d_min = -1 when not computed.
struct CodeParams {
    int n = 0, k = 0, r = 0, t = 0, d_min = -1;
    std::uint32_t q = 0;
    std::string role;  // LR, S-LR, availability, SA, MR, PMR, MDS
};

// Disjoint local groups covering [n]; each group has local distance delta+1.
struct LocalStructure {
    std::vector<std::vector<int>> groups;
    int delta = 1;
};

struct ErasurePattern {
    std::vector<int> indices;
};

struct LinearCode {
    FieldSpec F;
    Mat H;                 // parity check, possibly rank deficient
    std::optional<Mat> G;  // generator, when known
    int n = 0, k = 0;
    CodeParams params;
    std::optional<LocalStructure> structure;

    // G when present, otherwise a basis of the null space of H.
    Mat generator() const;
    // Row-reduced parity check of full rank n-k.
    Mat full_rank_parity() const;
};

LinearCode code_from_parity(const Mat& H);
LinearCode code_from_generator(const Mat& G);
LinearCode dual(const LinearCode& c);
// Errors: IndexOutOfRange.
LinearCode puncture(const LinearCode& c, const std::vector<int>& S);
LinearCode shorten(const LinearCode& c, const std::vector<int>& S);

namespace budget {
inline constexpr std::uint64_t kEnumerationWords = 1ull << 24;
inline constexpr std::uint64_t kColumnSubsets = 20'000'000ull;
inline constexpr std::uint64_t kSubspaces = 1'000'000ull;
inline constexpr std::uint64_t kMdsSubsets = 1'000'000ull;
}  // namespace budget

// Errors: BudgetExceeded.
int min_distance(const LinearCode& c);
// Minimum distance by codeword enumeration only.
int min_distance_enumerate(const LinearCode& c);
// Smallest number of linearly dependent columns of H (n-k+1 bound when none).
int min_distance_columns(const LinearCode& c);
// i-th generalized Hamming weight. Errors: BudgetExceeded, InvalidArgument.
int support_weight(const LinearCode& c, int i);
// Errors: BudgetExceeded.
bool is_mds(const LinearCode& c);

// Sorted codeword list; tests use it for set comparisons on small codes.
std::vector<std::vector<Fe>> all_codewords(const LinearCode& c);

std::uint64_t binom(int n, int k);
// Calls f on every k-subset of [0,n) in lexicographic order; stops when f returns false.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& f) {
    if (k < 0 || k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (!f(static_cast<const std::vector<int>&>(idx))) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace lrc
