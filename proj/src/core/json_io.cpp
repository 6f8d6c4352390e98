#include "pte/json_io.hpp"

#include "pte/error.hpp"

#include <fstream>

namespace pte {

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InvalidInput("expected a rational given as a \"p/q\" string, got " + j.dump());
}

Json to_json(const Point& p) {
    Json out = Json::array();
    for (const auto& x : p) out.push_back(to_json(x));
    return out;
}

Point point_from_json(const Json& j) {
    require(j.is_array(), "a point must be an array of rationals");
    Point p;
    for (const auto& x : j) p.push_back(rational_from_json(x));
    return p;
}

Json to_json(const PteInstance& instance) {
    const auto canon = instance.canonical();
    Json out;
    out["dimension"] = canon.dimension();
    out["degree"] = canon.degree();
    Json classes = Json::array();
    for (const auto& c : canon.classes()) {
        Json pts = Json::array();
        for (const auto& p : c.points()) pts.push_back(to_json(p));
        classes.push_back(std::move(pts));
    }
    out["classes"] = std::move(classes);
    return out;
}

PteInstance instance_from_json(const Json& j) {
    require(j.is_object(), "instance document must be a JSON object");
    require(j.contains("dimension") && j["dimension"].is_number_unsigned(), "missing or invalid \"dimension\"");
    require(j.contains("degree") && j["degree"].is_number_unsigned(), "missing or invalid \"degree\"");
    require(j.contains("classes") && j["classes"].is_array(), "missing or invalid \"classes\"");
    const auto r = j["dimension"].get<std::size_t>();
    const auto m = j["degree"].get<unsigned>();
    std::vector<PteClass> classes;
    for (const auto& c : j["classes"]) {
        require(c.is_array(), "each class must be an array of points");
        std::vector<Point> pts;
        for (const auto& p : c) {
            pts.push_back(point_from_json(p));
            require(pts.back().size() == r, "point dimension does not match \"dimension\"");
        }
        classes.emplace_back(std::move(pts));
    }
    return PteInstance(r, m, std::move(classes));
}

Json to_json(const Exponent& k) {
    Json out = Json::array();
    for (auto e : k) out.push_back(e);
    return out;
}

Json to_json(const VerificationReport& report) {
    Json out;
    out["holds"] = report.holds;
    if (!report.first_failure) {
        out["firstFailure"] = nullptr;
        return out;
    }
    const auto& f = *report.first_failure;
    Json ff;
    ff["classes"] = {f.first_class, f.second_class};
    if (f.kind == IdentityFailure::Kind::SharedPoint) {
        ff["kind"] = "shared-point";
        ff["point"] = to_json(f.shared_point);
    } else {
        ff["kind"] = "power-sum";
        ff["exponent"] = to_json(f.exponent);
        ff["values"] = {to_json(f.first_value), to_json(f.second_value)};
    }
    out["firstFailure"] = std::move(ff);
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace pte
