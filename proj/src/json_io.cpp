#include "ruelle/json_io.hpp"

#include <stdexcept>

namespace ruelle {

namespace {

Json complex_pair(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Complex complex_from(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Json to_json(const LaurentPoly& f) {
    Json coeffs = Json::array();
    for (const Complex& c : f.coeffs()) coeffs.push_back(complex_pair(c));
    return Json{{"min_deg", f.min_deg()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly laurent_from_json(const Json& j) {
    const int min_deg = j.at("min_deg").get<int>();
    std::vector<Complex> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(complex_from(c));
    return LaurentPoly::make(min_deg, std::move(coeffs));
}

Json to_json(const Filter& f) {
    Json j = to_json(f.m0());
    j["N"] = f.scale_N();
    return j;
}

Filter filter_from_json(const Json& j) {
    return Filter(laurent_from_json(j), j.at("N").get<int>());
}

Json to_json(const LawtonMatrix& M) {
    Json entries = Json::array();
    for (Eigen::Index r = 0; r < M.size(); ++r)
        for (Eigen::Index c = 0; c < M.size(); ++c)
            entries.push_back(complex_pair(M.entries()(r, c)));
    return Json{{"d", M.half_width()},
                {"N", M.scale_N()},
                {"entries", std::move(entries)}};
}

Json to_json(const EigenspaceResult& r) {
    Json basis = Json::array();
    for (const LaurentPoly& v : r.basis) basis.push_back(to_json(v));
    return Json{{"eigenvalue", complex_pair(r.eigenvalue)},
                {"tol", r.tol},
                {"dimension", r.dimension()},
                {"residuals", r.residuals},
                {"basis", std::move(basis)}};
}

Json to_json(const CycleDecomposition& c) {
    return Json{{"p", c.p}, {"cycles", c.cycles}};
}

Json to_json(const CriterionReport& r) {
    Json details = Json::array();
    for (const SubCheck& s : r.details)
        details.push_back(Json{
            {"name", s.name}, {"residual", s.residual}, {"passed", s.passed}});
    return Json{{"verdict", to_string(r.verdict)},
                {"qmf", r.qmf_holds},
                {"zero_conditions", r.zero_conditions_hold},
                {"dim", r.eigenvalue1_dimension},
                {"assumptions", r.assumptions},
                {"details", std::move(details)}};
}

Json to_json(const GridFunction& g) {
    Json values = Json::array();
    for (const Complex& v : g.values) values.push_back(complex_pair(v));
    return Json{{"start", g.domain_start},
                {"step", g.step},
                {"values", std::move(values)}};
}

}  // namespace ruelle
