#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace gaiakit {

// Malformed or inconsistent input data (bad identifiers, shape mismatches,
// non-commuting squares, ...). CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search exceeded its node budget. The caller decides whether
// to retry with a larger budget; silent truncation is never an option.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Domain-level failure (non-contractive map, empty dataset, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Countdown guard shared by the exhaustive searches. Each charge() is one
// explored node; hitting zero throws CapacityError.
class Budget {
public:
    static constexpr std::int64_t kDefault = 1'000'000;

    Budget() : remaining_(default_budget()) {}
    explicit Budget(std::int64_t nodes) : remaining_(nodes) {}

    void charge(std::int64_t n = 1) {
        remaining_ -= n;
        if (remaining_ < 0)
            throw CapacityError("search budget exhausted");
    }

    std::int64_t remaining() const { return remaining_; }

    static std::int64_t default_budget() {
        if (const char* env = std::getenv("GAIA_KIT_BUDGET")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && v > 0) return v;
        }
        return kDefault;
    }

private:
    std::int64_t remaining_;
};

} // namespace gaiakit
