#pragma once

// JSON and CSV serialization. Reals are written as decimal strings at the
// working precision, rationals as "p/q" strings.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lamkit/errors.hpp"
#include "lamkit/flat_surface.hpp"
#include "lamkit/numeric.hpp"
#include "lamkit/traintrack.hpp"

namespace lamkit {

using Json = nlohmann::ordered_json;

inline Json to_json(const TranslationSurface& s) {
    Json polygons = Json::array();
    for (const auto& poly : s.polygons()) {
        Json vertices = Json::array();
        for (const auto& p : poly) {
            vertices.push_back({to_decimal(p.x), to_decimal(p.y)});
        }
        polygons.push_back(std::move(vertices));
    }
    Json gluings = Json::array();
    for (const auto& g : s.gluings()) {
        gluings.push_back({g.first.polygon, g.first.edge, g.second.polygon, g.second.edge});
    }
    return Json{{"genus", s.genus()}, {"polygons", std::move(polygons)}, {"gluings", std::move(gluings)}};
}

namespace detail {

inline Real json_real(const Json& j) {
    if (j.is_string()) {
        return parse_real(j.get<std::string>());
    }
    if (j.is_number()) {
        std::ostringstream out;
        out << std::setprecision(17) << j.get<double>();
        return parse_real(out.str());
    }
    throw ParseError("expected a number or decimal string, got " + j.dump());
}

inline Rational json_rational(const Json& j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw ParseError("expected a rational as an integer or \"p/q\" string, got " + j.dump());
}

}  // namespace detail

/// Parses and validates a surface document; structural problems surface as
/// ValidationError from the TranslationSurface constructor.
inline TranslationSurface surface_from_json(const Json& doc) {
    try {
        const int genus = doc.at("genus").get<int>();
        std::vector<std::vector<Point>> polygons;
        for (const auto& poly : doc.at("polygons")) {
            std::vector<Point> vertices;
            for (const auto& v : poly) {
                if (!v.is_array() || v.size() != 2) {
                    throw ParseError("vertex must be a pair [x, y]");
                }
                vertices.push_back({detail::json_real(v[0]), detail::json_real(v[1])});
            }
            polygons.push_back(std::move(vertices));
        }
        std::vector<Gluing> gluings;
        for (const auto& g : doc.at("gluings")) {
            if (!g.is_array() || g.size() != 4) {
                throw ParseError("gluing must be [p, e, p', e']");
            }
            gluings.push_back({{g[0].get<int>(), g[1].get<int>()}, {g[2].get<int>(), g[3].get<int>()}});
        }
        return TranslationSurface(genus, std::move(polygons), std::move(gluings));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed surface document: ") + e.what());
    }
}

inline Json to_json(const TrackWeights& w) {
    Json components = Json::array();
    for (const auto& c : w.components) {
        components.push_back({{"x", to_string(c.x)}, {"y", to_string(c.y)}, {"z", to_string(c.z)}});
    }
    Json rest = Json::array();
    for (const auto& r : w.rest) {
        rest.push_back(to_string(r));
    }
    return Json{{"components", std::move(components)}, {"rest", std::move(rest)}};
}

/// Reads {components: [{x, y, z}], rest: [...]}; z may be omitted and is
/// then filled in from the switch condition. The result is validated.
inline TrackWeights weights_from_json(const Json& doc) {
    try {
        TrackWeights w;
        for (const auto& c : doc.at("components")) {
            const Rational x = detail::json_rational(c.at("x"));
            const Rational y = detail::json_rational(c.at("y"));
            const Rational z = c.contains("z") ? detail::json_rational(c.at("z")) : Rational(x + y);
            w.components.push_back({x, y, z});
        }
        if (doc.contains("rest")) {
            for (const auto& r : doc.at("rest")) {
                w.rest.push_back(detail::json_rational(r));
            }
        }
        validate(w);
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed weights document: ") + e.what());
    }
}

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameter("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
}

template <class Scalar>
Json to_json(const std::vector<Scalar>& values) {
    Json out = Json::array();
    for (const auto& v : values) {
        if constexpr (std::is_same_v<Scalar, Real>) {
            out.push_back(to_decimal(v));
        } else if constexpr (std::is_same_v<Scalar, Rational>) {
            out.push_back(to_string(v));
        } else {
            out.push_back(v);
        }
    }
    return out;
}

/// Minimal CSV writer; cells containing separators or quotes are quoted.
class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                out_ << ',';
            }
            out_ << quote(cells[i]);
        }
        out_ << '\n';
    }

  private:
    static std::string quote(const std::string& cell) {
        if (cell.find_first_of(",\"\n") == std::string::npos) {
            return cell;
        }
        std::string q = "\"";
        for (char c : cell) {
            if (c == '"') {
                q += '"';
            }
            q += c;
        }
        return q + '"';
    }

    std::ostream& out_;
};

}  // namespace lamkit
