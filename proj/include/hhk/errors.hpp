#pragma once

#include <stdexcept>
#include <string>

namespace hhk {

enum class Errc {
    NonPositive,        // parameter outside its admissible numeric range
    OrderingViolation,  // kernel interval endpoints out of order
    IllPosed,           // impatience condition fails; problem has no finite value
    DomainError,
    NoRealRoot,
    NonPositiveK,
    LatticeTooCoarse,   // kappa*sqrt(dt) >= 1, reweighted branch weights leave (0,1)
    TooLarge,           // enumeration budget exceeded
    KernelOutOfBounds,
    NotMonotone,
    TailTooLarge,       // truncation tail cannot be certified below tolerance
    RegionEmpty,
    ViolationFound,
    ConditionViolated,
    BadConfig,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace hhk
