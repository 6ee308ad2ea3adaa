#pragma once
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

// Evaluation set split into cosets of the order-(r+1) subgroup; g(x) = x^good_degree
// is constant on each coset.
struct EvalPoints {
    FieldSpec F;
    std::vector<std::vector<Fe>> cosets;
    int good_degree = 0;
};

// Errors: SubgroupUnavailable.
EvalPoints subgroup_cosets(const FieldSpec& F, int n, int r);

// Errors: FieldTooSmall, InvalidArgument.
LinearCode pyramid_code(int n, int k, int r, const FieldSpec& F);
// Errors: SubgroupUnavailable, InvalidArgument.
LinearCode tamo_barg_code(int n, int k, int r, const FieldSpec& F);

// Errors: BudgetExceeded.
LinearCode product_avail_code(int r, int t);
LinearCode wang_avail_code(int r, int t);

// Line-point incidence of PG(2, 2^s). Errors: InvalidArgument.
LinearCode pg_plane_sa_code(int s);
// Point-line incidence of PG(s-1, 2). Errors: InvalidArgument.
LinearCode steiner_sa_code(int s);

}  // namespace lrc
