#include "msf7/json_io.hpp"

#include "msf7/error.hpp"

namespace msf7 {

namespace {

Scalar scalar_from_json(const Json& j)
{
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(Integer(std::to_string(j.get<long long>())));
    throw Error("coefficient must be a fraction string or an integer");
}

}  // namespace

Json to_json(const KForm& f)
{
    Json terms = Json::array();
    for (auto& [idx, c] : f.terms()) terms.push_back({{"idx", idx.to_vector()}, {"coef", to_string(c)}});
    return {{"degree", f.degree()}, {"terms", terms}};
}

KForm kform_from_json(const Json& j)
{
    if (!j.is_object()) throw Error("form JSON must be an object");
    if (!j.contains("degree") || !j["degree"].is_number_integer()) throw Error("form JSON needs integer 'degree'");
    if (!j.contains("terms") || !j["terms"].is_array()) throw Error("form JSON needs array 'terms'");
    int degree = j["degree"].get<int>();
    if (degree < 0 || degree > kDim) throw Error("form degree out of range 0..7");
    KForm f(degree);
    for (auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("idx") || !t.contains("coef") || !t["idx"].is_array())
            throw Error("form term needs 'idx' array and 'coef'");
        std::vector<int> idx;
        for (auto& i : t["idx"]) {
            if (!i.is_number_integer()) throw Error("index entries must be integers");
            idx.push_back(i.get<int>());
        }
        f.add(MultiIndex(idx), scalar_from_json(t["coef"]));
    }
    return f;
}

Json to_json(const LinearMap& g)
{
    Json cols = Json::array();
    for (int j = 0; j < kDim; ++j) {
        Json col = Json::array();
        for (int i = 0; i < kDim; ++i) col.push_back(to_string(g(i, j)));
        cols.push_back(col);
    }
    return {{"cols", cols}};
}

LinearMap linear_map_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("cols") || !j["cols"].is_array() || j["cols"].size() != kDim)
        throw Error("map JSON needs 'cols' with 7 columns");
    LinearMap g;
    for (int c = 0; c < kDim; ++c) {
        const Json& col = j["cols"][c];
        if (!col.is_array() || col.size() != kDim) throw Error("each map column needs 7 entries");
        for (int i = 0; i < kDim; ++i) g(i, c) = scalar_from_json(col[i]);
    }
    return g;
}

Json to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

KForm parse_kform(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(std::string("malformed JSON: ") + e.what());
    }
    return kform_from_json(j);
}

}  // namespace msf7
