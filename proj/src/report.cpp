#include "xeop/report.hpp"

#include <algorithm>

namespace xeop {

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

CheckResult exact_zero_check(std::string name, std::string params, const RationalFunction& residual,
                             std::string detail) {
    CheckResult c{std::move(name), std::move(params), residual.is_zero(), std::nullopt, std::move(detail)};
    if (!c.passed) {
        c.witness = residual.num();
    }
    return c;
}

void to_json(Json& j, const CheckResult& c) {
    j = Json{{"name", c.name}, {"params", c.params}, {"status", c.passed ? "pass" : "fail"}};
    j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    if (!c.detail.empty()) {
        j["detail"] = c.detail;
    }
}

void to_json(Json& j, const Report& r) {
    j = Json{{"passed", r.all_passed()},
             {"total", r.checks.size()},
             {"failures", r.failures()},
             {"checks", r.checks}};
}

}  // namespace xeop
