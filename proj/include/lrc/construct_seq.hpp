#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrc/code.hpp"
#include "lrc/graph.hpp"

namespace lrc {

// Block sizes of a staircase parity-check matrix.
// a[i] counts the columns of block i and rho[i] the rows of block i.
// For even t a trailing column block C (edges inside the last layer) is appended to a.
struct StaircaseProfile {
    int s = 0;
    std::vector<long long> a;
    std::vector<long long> rho;
};

// Systematic H = [I_m | incidence(G)] over GF(2) for a near-regular graph with k edges.
LinearCode t2_near_regular_code(int k, int r);
LinearCode t2_turan_code(int r, int beta);
// Errors: ParamDecompositionFails.
LinearCode t2_dim_optimal_code(int m, int r);
// which is "ex1" or "ex2". Errors: InvalidArgument.
LinearCode t3_catalog(const std::string& which);

enum class AuxChoice { Catalog, Random };

struct SeqBuild {
    LinearCode code;
    Graph base;                  // base graph (no V-infinity), layers in labels
    EdgeColoring base_coloring;  // palette r+1; empty when the tree-graph route is not used
    std::optional<Graph> aux;    // absent when the base already has the girth
    Graph expanded;              // final graph including V-infinity as its last node
    StaircaseProfile profile;
    std::uint64_t seed = 0;
    std::string route;           // "complete", "moore", "tree", "tree+expansion"
};

// Errors: UnsupportedT, AuxiliaryUnavailable, InvalidArgument.
SeqBuild seq_general_build(int r, int t, AuxChoice aux = AuxChoice::Catalog, std::uint64_t seed = 0);
LinearCode seq_general_code(int r, int t, AuxChoice aux = AuxChoice::Catalog, std::uint64_t seed = 0);

// Errors: NotInCatalog.
LinearCode moore_code(int r, int t);

}  // namespace lrc
