#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace m0n {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wall-clock allowance checked cooperatively between units of work.
class Budget {
public:
    Budget() = default;
    explicit Budget(double seconds) : limit_(seconds) {}

    static Budget unlimited() { return {}; }

    bool limited() const { return limit_.has_value(); }
    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    /// Throws BudgetExceeded once the allowance is used up.
    void check(const std::string& where) const
    {
        if (limit_ && elapsed() > *limit_)
            throw BudgetExceeded("budget of " + std::to_string(*limit_) + "s exceeded during " + where);
    }

private:
    std::optional<double> limit_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace m0n
