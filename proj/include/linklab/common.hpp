#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace linklab {

inline constexpr const char* kVersion = "0.1.0";

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Precondition violations (bad cycle, non-injective gluing, wrong host graph, ...).
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A bounded retry budget ran out (embedding draws, connector perturbation, ...).
struct ResourceExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A projection direction produced a degenerate picture. Retryable: callers
/// draw the next direction from their deterministic sequence.
struct NonGenericDirection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a theorem-backed quantity is measured with the wrong value;
/// always a bug in the geometry stack, never an expected outcome.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline int sgn(const Rational& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

inline int sgn(const BigInt& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

/// Seeded RNG with a portable bounded-draw helper. mt19937_64 bit output is
/// pinned by the standard; std::uniform_int_distribution is not, so we do the
/// rejection sampling ourselves to keep outputs identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw InvalidArgument("Rng::below: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        if (lo > hi) throw InvalidArgument("Rng::range: empty range");
        const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(below(width));
    }

private:
    std::mt19937_64 engine_;
};

/// Parses "p/q" or "p" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw InvalidArgument("rational with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw InvalidArgument("malformed rational: " + s);
    }
}

/// Emits a canonical exact string: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace linklab
