#include "registry.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include <json.hpp>

namespace univalent::cli
{

namespace
{

double parse_real(const std::string &s, const std::string &what)
{
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception &) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) {
        throw Error(Errc::ParamOutOfRange, "bad " + what + ": '" + s + "'");
    }
    return v;
}

PowerSeries coeffs_from_json(const std::string &text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::UnknownFunction, std::string("coeffs: malformed JSON: ") + e.what());
    }
    if (j.is_object()) {
        return series_from_json(j);
    }
    if (!j.is_array() || j.empty()) {
        throw Error(Errc::UnknownFunction, "coeffs: expected an object or a non-empty array");
    }
    std::vector<Complex> c;
    for (const auto &e : j) {
        if (e.is_number()) {
            c.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            c.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw Error(Errc::UnknownFunction, "coeffs: entries must be numbers or [re, im] pairs");
        }
    }
    return PowerSeries(std::move(c));
}

} // namespace

bool is_closed_form(const std::string &spec)
{
    return spec == "koebe" || spec == "identity" || spec.rfind("koebe-rot:", 0) == 0;
}

ClassSFunction make_function(const std::string &spec, std::size_t order)
{
    if (spec == "koebe") {
        return ClassSFunction(koebe(order).series(), spec);
    }
    if (spec == "identity") {
        return ClassSFunction(identity_function(order).series(), spec);
    }
    if (spec.rfind("koebe-rot:", 0) == 0) {
        const double theta = parse_real(spec.substr(10), "rotation angle");
        return ClassSFunction(transform(koebe(order), Rotation{theta}).series(), spec);
    }
    if (spec.rfind("coeffs:", 0) == 0) {
        return ClassSFunction(coeffs_from_json(spec.substr(7)), "coeffs");
    }
    throw Error(Errc::UnknownFunction, "unknown function '" + spec + "'");
}

std::vector<Complex> parse_grid(const std::string &spec)
{
    std::vector<Complex> pts;
    if (spec.rfind("polar:", 0) == 0) {
        const std::string body = spec.substr(6);
        const auto x = body.find('x');
        if (x == std::string::npos) {
            throw Error(Errc::ParamOutOfRange, "polar grid is polar:<R>x<A>");
        }
        const auto radial = static_cast<int>(parse_real(body.substr(0, x), "grid size"));
        const auto angular = static_cast<int>(parse_real(body.substr(x + 1), "grid size"));
        if (radial < 1 || angular < 1) {
            throw Error(Errc::ParamOutOfRange, "grid sizes must be positive");
        }
        for (int i = 1; i <= radial; ++i) {
            const double r = static_cast<double>(i) / (radial + 1);
            for (int j = 0; j < angular; ++j) {
                pts.push_back(std::polar(r, 2.0 * std::numbers::pi * j / angular));
            }
        }
        return pts;
    }
    if (spec.rfind("list:", 0) == 0) {
        std::string rest = spec.substr(5);
        std::size_t start = 0;
        while (start <= rest.size()) {
            const auto end = rest.find(';', start);
            const std::string item = rest.substr(start, end == std::string::npos ? std::string::npos : end - start);
            const auto comma = item.find(',');
            if (comma == std::string::npos) {
                pts.emplace_back(parse_real(item, "grid point"), 0.0);
            } else {
                pts.emplace_back(parse_real(item.substr(0, comma), "grid point"),
                                 parse_real(item.substr(comma + 1), "grid point"));
            }
            if (end == std::string::npos) {
                break;
            }
            start = end + 1;
        }
        return pts;
    }
    throw Error(Errc::ParamOutOfRange, "unknown grid '" + spec + "'");
}

void write_output(const std::string &path, const std::string &text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::filesystem::path target(path);
    if (target.is_relative()) {
        if (const char *dir = std::getenv("UNIVALENT_OUT_DIR"); dir != nullptr && *dir != '\0') {
            target = std::filesystem::path(dir) / target;
        }
    }
    std::ofstream os(target, std::ios::binary);
    if (!os) {
        throw Error(Errc::IoFailure, "cannot open '" + target.string() + "' for writing");
    }
    os << text;
    if (!os) {
        throw Error(Errc::IoFailure, "write to '" + target.string() + "' failed");
    }
}

} // namespace univalent::cli
