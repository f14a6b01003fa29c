#ifndef UNIVALENT_CLI_SUITES_HPP
#define UNIVALENT_CLI_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <univalent/report.hpp>

namespace univalent::cli
{

struct SuiteConfig {
    std::string suite = "all";
    std::string function = "koebe";
    std::optional<int> n;
    std::size_t order = 64;
    double tolerance = 1e-9;
    std::vector<double> radii{0.3, 0.5, 0.7, 0.9};
    std::vector<double> ladder{0.9, 0.99, 0.999};
    std::size_t quadrature = 1024;
    std::uint64_t seed = 0;
    double t = 0.5;
    double horizon = 8.0;
    std::string out;
    std::string format = "json";

    /// Throws ParamOutOfRange on tolerance <= 0 or order < 4.
    void validate() const;
    nlohmann::json to_json() const;
};

const std::vector<std::string> &suite_names();

/// Runs one suite (or every suite for "all"). Throws UnknownSuite.
std::vector<BoundReport> run_suite(const SuiteConfig &config);

} // namespace univalent::cli

#endif
