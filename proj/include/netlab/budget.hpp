#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

namespace netlab {

/// Cooperative time budget. Long loops poll `expired()`; nothing is killed.
class Deadline {
public:
    using clock = std::chrono::steady_clock;

    /// No limit.
    Deadline() = default;

    static Deadline after(std::chrono::duration<double> budget) {
        Deadline d;
        d.limited_ = true;
        d.end_ = clock::now() + std::chrono::duration_cast<clock::duration>(budget);
        return d;
    }

    static Deadline minutes(double m) { return after(std::chrono::duration<double>(m * 60.0)); }

    bool limited() const { return limited_; }
    bool expired() const { return limited_ && clock::now() >= end_; }

private:
    bool limited_ = false;
    clock::time_point end_{};
};

/// Wall-clock stopwatch in seconds.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace netlab
