#pragma once

#include <cmath>
#include <string>

#include "stori/errors.hpp"

namespace stori {

/// Grid timestamps within this distance of an interval endpoint are treated
/// as landing exactly on it.
inline constexpr double kTimeEps = 1e-12;

/// Bounded time interval <a,b> with 0 <= a < b < inf and independently
/// open or closed endpoints.
class TimeInterval {
public:
    TimeInterval(double lower, double upper, bool lower_open, bool upper_open)
        : lower_(lower), upper_(upper), lower_open_(lower_open), upper_open_(upper_open) {
        if (!(lower >= 0.0))
            throw Error("time interval lower bound must be >= 0, got " + std::to_string(lower));
        if (!(lower < upper))
            throw Error("time interval requires lower < upper, got [" + std::to_string(lower) +
                        ", " + std::to_string(upper) + "]");
        if (!std::isfinite(upper))
            throw Error("time interval upper bound must be finite");
    }

    static TimeInterval closed(double lower, double upper) {
        return TimeInterval(lower, upper, false, false);
    }
    static TimeInterval open(double lower, double upper) {
        return TimeInterval(lower, upper, true, true);
    }

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }
    bool lower_open() const noexcept { return lower_open_; }
    bool upper_open() const noexcept { return upper_open_; }

    /// Membership test for grid timestamps.  A point within kTimeEps of an
    /// endpoint counts as landing exactly on it: included for a closed
    /// endpoint, excluded for an open one.
    bool contains(double t) const noexcept {
        bool lower_ok = std::abs(t - lower_) <= kTimeEps ? !lower_open_ : t > lower_;
        bool upper_ok = std::abs(t - upper_) <= kTimeEps ? !upper_open_ : t < upper_;
        return lower_ok && upper_ok;
    }

    bool operator==(const TimeInterval& o) const noexcept {
        return lower_ == o.lower_ && upper_ == o.upper_ && lower_open_ == o.lower_open_ &&
               upper_open_ == o.upper_open_;
    }

    std::string to_string() const;

private:
    double lower_;
    double upper_;
    bool lower_open_;
    bool upper_open_;
};

/// Shortest decimal string that round-trips through a double.
std::string format_double(double v);

}  // namespace stori
