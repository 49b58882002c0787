#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace regrep {

// Malformed input or violated precondition.
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

// An exponential-cost computation was refused because its size exceeds a guard.
class GuardError : public std::length_error {
   public:
    GuardError(std::string guard, std::int64_t limit, std::int64_t requested)
        : std::length_error("resource guard '" + guard + "' tripped: requested " +
                            std::to_string(requested) + ", limit " + std::to_string(limit)),
          guard_(std::move(guard)),
          limit_(limit),
          requested_(requested) {}

    const std::string& guard() const noexcept { return guard_; }
    std::int64_t limit() const noexcept { return limit_; }
    std::int64_t requested() const noexcept { return requested_; }

   private:
    std::string guard_;
    std::int64_t limit_;
    std::int64_t requested_;
};

// Two computation routes that must agree did not; always a bug, never user error.
class InternalError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

inline void check_guard(const char* guard, std::int64_t requested, std::int64_t limit) {
    if (requested > limit) throw GuardError(guard, limit, requested);
}

}  // namespace regrep
