#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fnalg.hpp"

namespace nachbin {

/// Named values sufficient to re-run a single failing case.
struct Counterexample {
    std::vector<std::pair<std::string, RationalFn>> functions;
    std::vector<std::pair<std::string, Rational>> scalars;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;  // instances where the hypothesis held
    std::size_t sampled = 0;  // instances drawn
    std::optional<Counterexample> counterexample;
};

class AxiomReport {
public:
    void add(CheckResult result) { results_.push_back(std::move(result)); }

    const std::vector<CheckResult>& results() const noexcept { return results_; }

    const CheckResult* find(const std::string& name) const {
        for (const auto& r : results_)
            if (r.name == name) return &r;
        return nullptr;
    }

    bool all_passed() const {
        for (const auto& r : results_)
            if (!r.passed) return false;
        return true;
    }

    bool all_passed(const std::vector<std::string>& names) const {
        for (const auto& n : names) {
            auto* r = find(n);
            if (r == nullptr || !r->passed) return false;
        }
        return true;
    }

private:
    std::vector<CheckResult> results_;
};

namespace detail {

/// Records one sampled instance of an implication. Keeps the first counterexample only.
template <class MakeCounterexample>
void record(CheckResult& result, bool hypothesis, bool conclusion, MakeCounterexample&& make) {
    ++result.sampled;
    if (!hypothesis) return;
    ++result.checked;
    if (conclusion) return;
    if (result.passed) result.counterexample = make();
    result.passed = false;
}

} // namespace detail

} // namespace nachbin
