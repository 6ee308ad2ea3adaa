#include "lrc/io.hpp"

#include <set>

namespace lrc {

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const char* where) {
    if (!j.is_object()) throw Error("SchemaError", std::string(where) + " must be an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw Error("SchemaError", std::string("unknown field '") + it.key() + "' in " + where);
}

Mat rows_from_json(const FieldSpec& F, const json& rows) {
    if (!rows.is_array()) throw Error("SchemaError", "rows must be an array");
    std::vector<std::vector<Fe>> v;
    for (const auto& r : rows) {
        if (!r.is_array()) throw Error("SchemaError", "each row must be an array");
        std::vector<Fe> row;
        for (const auto& x : r) {
            if (!x.is_number_unsigned()) throw Error("SchemaError", "entries must be nonnegative integers");
            row.push_back(x.get<Fe>());
        }
        v.push_back(std::move(row));
    }
    return Mat::from_rows(F, v);
}

json rows_to_json(const Mat& M) {
    json rows = json::array();
    for (int i = 0; i < M.rows; ++i) rows.push_back(M.row(i));
    return rows;
}

}  // namespace

json field_to_json(const FieldSpec& F) {
    return json{{"p", F.p()}, {"m", F.m()}, {"modulus", F.modulus()}};
}

FieldSpec field_from_json(const json& j) {
    reject_unknown(j, {"p", "m", "modulus"}, "field");
    const auto p = j.at("p").get<std::uint32_t>();
    const auto m = j.value("m", 1u);
    std::optional<std::vector<std::uint32_t>> mod;
    if (j.contains("modulus") && !j["modulus"].empty()) mod = j["modulus"].get<std::vector<std::uint32_t>>();
    return field_make(p, m, mod);
}

json mat_to_json(const Mat& M) {
    json j{{"field", field_to_json(M.F)}, {"rows", rows_to_json(M)}};
    if (M.rows == 0) j["cols"] = M.cols;
    return j;
}

Mat mat_from_json(const json& j) {
    reject_unknown(j, {"field", "rows", "cols"}, "matrix");
    const FieldSpec F = field_from_json(j.at("field"));
    Mat M = rows_from_json(F, j.at("rows"));
    if (M.rows == 0 && j.contains("cols")) M.cols = j["cols"].get<int>();
    return M;
}

json code_to_json(const LinearCode& c) {
    json j = mat_to_json(c.H);
    j["schema"] = kCodeSchema;
    json params{{"n", c.n}, {"k", c.k}, {"r", c.params.r}, {"t", c.params.t}, {"role", c.params.role}};
    if (c.params.d_min >= 0) params["d"] = c.params.d_min;
    j["params"] = params;
    if (c.G) j["generator"] = rows_to_json(*c.G);
    if (c.structure) j["structure"] = json{{"groups", c.structure->groups}, {"delta", c.structure->delta}};
    return j;
}

LinearCode code_from_json(const json& j) {
    reject_unknown(j, {"schema", "field", "rows", "cols", "params", "generator", "structure", "provenance"}, "code");
    if (j.contains("schema") && j["schema"] != kCodeSchema)
        throw Error("SchemaError", "unsupported schema " + j["schema"].dump());
    json mj{{"field", j.at("field")}, {"rows", j.at("rows")}};
    if (j.contains("cols")) mj["cols"] = j["cols"];
    LinearCode c = code_from_parity(mat_from_json(mj));
    if (j.contains("generator")) {
        Mat G = rows_from_json(c.F, j["generator"]);
        if (G.cols != c.n) throw Error("SchemaError", "generator width differs from n");
        c.G = G;
    }
    if (j.contains("params")) {
        const json& p = j["params"];
        reject_unknown(p, {"n", "k", "r", "t", "d", "role"}, "params");
        if (p.contains("n") && p["n"].get<int>() != c.n) throw Error("SchemaError", "declared n differs from matrix");
        c.params.r = p.value("r", 0);
        c.params.t = p.value("t", 0);
        c.params.d_min = p.value("d", -1);
        c.params.role = p.value("role", std::string());
    }
    if (j.contains("structure")) {
        const json& s = j["structure"];
        reject_unknown(s, {"groups", "delta"}, "structure");
        LocalStructure ls;
        ls.groups = s.at("groups").get<std::vector<std::vector<int>>>();
        ls.delta = s.value("delta", 1);
        c.structure = ls;
    }
    return c;
}

}  // namespace lrc
