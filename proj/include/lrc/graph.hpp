#pragma once
#include <climits>
#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lrc/code.hpp"

namespace lrc {

struct Graph {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    // Optional per-node layer tag; kLayerInfinity marks V-infinity.
    std::vector<int> labels;

    static constexpr int kLayerInfinity = -1;

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    // Throws InvalidGraph on loops, parallel edges or bad endpoints.
    void validate() const;
};

struct EdgeColoring {
    std::vector<int> color;  // per edge, in [0, palette)
    int palette = 0;
};

inline constexpr int kInfiniteGirth = INT_MAX;

int girth(const Graph& g);
// 2-colouring of the nodes, empty when g is not bipartite.
std::vector<int> bipartition(const Graph& g);

// Errors: DegreeSequenceInfeasible.
Graph near_regular_graph(int k, int r);
// Errors: InvalidBeta.
Graph turan_graph(int r, int beta);
// Errors: ConstructionFailed, InvalidArgument.
Graph bipartite_regular_girth(int degree, int girth, std::uint64_t seed = 0);
// Seeded greedy search only, skipping the algebraic catalog.
Graph bipartite_regular_girth_search(int degree, int girth, std::uint64_t seed);
// Errors: NotBipartiteRegular.
EdgeColoring edge_color_bipartite(const Graph& g);
// Errors: NotInCatalog.
Graph moore_catalog(int r, int t);
// Coefficients are 1 unless a seed asks for random nonzero ones.
LinearCode incidence_code(const Graph& g, const FieldSpec& F, std::optional<std::uint64_t> coeff_seed = std::nullopt);

// Havel-Hakimi realisation of a degree sequence with a fixed tie order.
Graph havel_hakimi(const std::vector<int>& degrees);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph petersen_graph();
Graph hoffman_singleton_graph();
// Lines of PG(2,q) as sorted point lists; points indexed 0..q^2+q.
std::vector<std::vector<int>> projective_plane_lines(const FieldSpec& F);
// Totally isotropic lines of W(q) inside PG(3,q).
std::vector<std::vector<int>> symplectic_quadrangle_lines(const FieldSpec& F);
// Bipartite point-line graph: points first, then lines.
Graph incidence_graph(int points, const std::vector<std::vector<int>>& lines);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace lrc
