#include <univalent/report.hpp>

#include <algorithm>
#include <cmath>

namespace univalent
{

bool BoundReport::add(std::string id, double lhs, double rhs)
{
    const bool pass = std::isfinite(lhs) && std::isfinite(rhs) && lhs <= rhs + tolerance_;
    cases_.push_back({std::move(id), lhs, rhs, pass});
    return pass;
}

void BoundReport::add_verdict(std::string id, double lhs, double rhs, bool pass)
{
    cases_.push_back({std::move(id), lhs, rhs, pass});
}

void BoundReport::merge(const BoundReport &other, const std::string &prefix)
{
    for (const auto &c : other.cases()) {
        cases_.push_back({prefix + c.id, c.lhs, c.rhs, c.pass});
    }
}

bool BoundReport::all_pass() const noexcept
{
    return failures() == 0;
}

std::size_t BoundReport::failures() const noexcept
{
    return static_cast<std::size_t>(std::count_if(cases_.begin(), cases_.end(), [](const auto &c) { return !c.pass; }));
}

nlohmann::json BoundReport::to_json() const
{
    auto sorted = cases_;
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    nlohmann::json cases = nlohmann::json::array();
    for (const auto &c : sorted) {
        // JSON has no inf/nan; emit null so the report stays parseable.
        auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
        cases.push_back({{"id", c.id}, {"lhs", num(c.lhs)}, {"rhs", num(c.rhs)}, {"pass", c.pass}});
    }
    return {{"suite", name_}, {"tolerance", tolerance_}, {"cases", std::move(cases)}};
}

} // namespace univalent
