#include "pte/design_json.hpp"

#include "pte/error.hpp"

namespace pte {

namespace {

Json int_rows(const std::vector<std::vector<std::size_t>>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) out.push_back(r);
    return out;
}

std::vector<std::vector<std::size_t>> index_rows(const Json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be an array of integer lists");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& row : j) {
        require(row.is_array(), std::string(what) + " must be an array of integer lists");
        std::vector<std::size_t> r;
        for (const auto& x : row) {
            require(x.is_number_unsigned(), std::string(what) + " entries must be nonnegative integers");
            r.push_back(x.get<std::size_t>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t param(const Json& j, const char* name) {
    require(j.contains("params") && j["params"].contains(name) && j["params"][name].is_number_unsigned(),
            std::string("missing or invalid params.") + name);
    return j["params"][name].get<std::size_t>();
}

} // namespace

Json to_json(const OrthogonalArray& oa, bool type1) {
    Json out;
    out["kind"] = type1 ? "type1oa" : "oa";
    out["params"] = {{"runs", oa.rows.size()},
                     {"factors", oa.rows.empty() ? 0 : oa.rows.front().size()},
                     {"levels", oa.levels},
                     {"strength", oa.strength},
                     {"index", oa.index}};
    Json rows = Json::array();
    for (const auto& r : oa.rows) rows.push_back(to_json(Point(r)));
    out["rows"] = std::move(rows);
    return out;
}

Json to_json(const Gdd& d) {
    Json out;
    out["kind"] = "gdd";
    out["params"] = {{"points", d.point_count}, {"groups", d.group_count()}, {"groupSize", d.group_size()},
                     {"t", d.t},                {"k", d.k},                  {"lambda", d.lambda},
                     {"blocks", d.blocks.size()}};
    out["groups"] = int_rows(d.groups);
    out["blocks"] = int_rows(d.blocks);
    return out;
}

Json latin_to_json(const std::vector<std::vector<int>>& grid) {
    Json out;
    out["kind"] = "latin";
    out["params"] = {{"order", grid.size()}};
    out["grid"] = grid;
    return out;
}

Json hadamard_to_json(const HadamardMatrix& h) {
    Json out;
    out["kind"] = "hadamard";
    out["params"] = {{"order", h.size()}};
    out["rows"] = h;
    return out;
}

SymbolArray rows_from_json(const Json& j) {
    require(j.contains("rows") && j["rows"].is_array(), "missing \"rows\"");
    SymbolArray out;
    for (const auto& r : j["rows"]) out.push_back(point_from_json(r));
    return out;
}

Gdd gdd_from_json(const Json& j) {
    require(j.contains("blocks"), "missing \"blocks\"");
    const std::size_t n = param(j, "points");
    std::vector<std::vector<std::size_t>> groups;
    if (j.contains("groups")) {
        groups = index_rows(j["groups"], "groups");
    } else {
        for (std::size_t i = 0; i < n; ++i) groups.push_back({i});
    }
    return Gdd::make(n, std::move(groups), index_rows(j["blocks"], "blocks"), static_cast<unsigned>(param(j, "t")),
                     param(j, "k"), param(j, "lambda"));
}

std::vector<std::vector<int>> grid_from_json(const Json& j, const char* field) {
    require(j.contains(field) && j[field].is_array(), std::string("missing \"") + field + "\"");
    std::vector<std::vector<int>> out;
    for (const auto& row : j[field]) {
        require(row.is_array(), std::string(field) + " must be an array of integer rows");
        std::vector<int> r;
        for (const auto& x : row) {
            require(x.is_number_integer(), std::string(field) + " entries must be integers");
            r.push_back(x.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace pte
