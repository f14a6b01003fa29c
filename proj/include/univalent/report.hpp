#ifndef UNIVALENT_REPORT_HPP
#define UNIVALENT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace univalent
{

struct BoundCase {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

/// A named list of inequality checks lhs <= rhs + tolerance.
class BoundReport
{
public:
    BoundReport(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

    /// Records lhs <= rhs + tolerance; returns the verdict.
    bool add(std::string id, double lhs, double rhs);
    /// Records a case whose verdict was decided by the caller (e.g. equality checks).
    void add_verdict(std::string id, double lhs, double rhs, bool pass);
    void merge(const BoundReport &other, const std::string &prefix = {});

    const std::string &name() const noexcept
    {
        return name_;
    }
    double tolerance() const noexcept
    {
        return tolerance_;
    }
    const std::vector<BoundCase> &cases() const noexcept
    {
        return cases_;
    }
    bool all_pass() const noexcept;
    std::size_t failures() const noexcept;

    /// {"suite": name, "tolerance": t, "cases": [...]}, cases sorted by id.
    nlohmann::json to_json() const;

private:
    std::string name_;
    double tolerance_;
    std::vector<BoundCase> cases_;
};

} // namespace univalent

#endif
