#ifndef XEOP_REPORT_HPP
#define XEOP_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "xeop/serialize.hpp"

namespace xeop {

/// One verification outcome.  A failing exact check carries the nonzero
/// residual numerator as its witness.
struct CheckResult {
    std::string name;
    std::string params;
    bool passed = false;
    std::optional<Polynomial> witness;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;

    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void merge(const Report& other);
    bool all_passed() const;
    std::size_t failures() const;
};

/// Exact check "residual == 0"; the residual numerator becomes the witness.
CheckResult exact_zero_check(std::string name, std::string params, const RationalFunction& residual,
                             std::string detail = {});

void to_json(Json& j, const CheckResult& c);
void to_json(Json& j, const Report& r);

}  // namespace xeop

#endif  // XEOP_REPORT_HPP
