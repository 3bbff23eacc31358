#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace monkey {

/// Working-precision decimal used for mantissas and log-space values.
using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>,
                                              boost::multiprecision::et_off>;

/// Default number of significant digits used when printing a ScaledDecimal.
inline constexpr int kDefaultSignificantDigits = 4;

/**
 * Nonnegative base-10 number stored as `mantissa * 10^exponent`.
 *
 * The mantissa lies in [1, 10) and carries 50 significant decimal digits; the
 * exponent is an exact 64-bit integer, so magnitudes far outside the range of
 * `double` (10^-2609, 10^69, ...) are represented without saturation. Zero is
 * an explicit state with mantissa 0 and exponent 0.
 */
class ScaledDecimal {
public:
    ScaledDecimal() = default;

    static ScaledDecimal zero() { return {}; }
    static ScaledDecimal one() { return from_parts(Decimal{1}, 0); }

    /// Builds `mantissa * 10^exponent` and renormalizes. Negative values are rejected.
    static ScaledDecimal from_parts(Decimal mantissa, std::int64_t exponent) {
        if (mantissa < 0) {
            throw std::domain_error("ScaledDecimal: negative values are not representable");
        }
        ScaledDecimal out;
        if (mantissa == 0) {
            return out;
        }
        if (mantissa >= 100 || mantissa < 1) {
            // Coarse shift by a power of ten (exact in decimal), then fix up below.
            const auto shift = static_cast<std::int64_t>(
                boost::multiprecision::floor(boost::multiprecision::log10(mantissa)));
            mantissa *= boost::multiprecision::pow(Decimal{10}, static_cast<int>(-shift));
            exponent += shift;
        }
        while (mantissa >= 10) {
            mantissa /= 10;
            ++exponent;
        }
        while (mantissa < 1) {
            mantissa *= 10;
            --exponent;
        }
        out.mantissa_ = std::move(mantissa);
        out.exponent_ = exponent;
        return out;
    }

    static ScaledDecimal from_double(double value) {
        if (!std::isfinite(value)) {
            throw std::domain_error("ScaledDecimal: non-finite input");
        }
        return from_parts(Decimal{value}, 0);
    }

    static ScaledDecimal from_integer(std::uint64_t value) { return from_parts(Decimal{value}, 0); }

    /// Parses `<mantissa>e<exponent>` (or any plain decimal literal).
    static ScaledDecimal parse(std::string_view text) {
        const auto pos = text.find_first_of("eE");
        try {
            if (pos == std::string_view::npos) {
                return from_parts(Decimal{std::string(text)}, 0);
            }
            const Decimal mantissa{std::string(text.substr(0, pos))};
            const std::int64_t exponent = std::stoll(std::string(text.substr(pos + 1)));
            return from_parts(mantissa, exponent);
        } catch (const std::domain_error&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("ScaledDecimal: cannot parse '" + std::string(text) + "'");
        }
    }

    [[nodiscard]] const Decimal& mantissa() const { return mantissa_; }
    [[nodiscard]] std::int64_t exponent() const { return exponent_; }
    [[nodiscard]] bool is_zero() const { return mantissa_ == 0; }

    friend bool operator==(const ScaledDecimal& a, const ScaledDecimal& b) {
        return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
    }

    friend std::strong_ordering operator<=>(const ScaledDecimal& a, const ScaledDecimal& b) {
        if (a.is_zero() || b.is_zero()) {
            return static_cast<int>(!a.is_zero()) <=> static_cast<int>(!b.is_zero());
        }
        if (a.exponent_ != b.exponent_) {
            return a.exponent_ <=> b.exponent_;
        }
        if (a.mantissa_ == b.mantissa_) {
            return std::strong_ordering::equal;
        }
        return a.mantissa_ < b.mantissa_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    Decimal mantissa_{0};
    std::int64_t exponent_{0};
};

namespace detail {

// Division leaves a tail of guard digits (3.6 / 3600 -> 0.000999...9); rounding
// back to the declared precision makes exact quotients exact.
inline Decimal round_to_working_precision(const Decimal& x) {
    return Decimal{x.str(std::numeric_limits<Decimal>::digits10, std::ios_base::scientific)};
}

}  // namespace detail

/// Returns 10^l from a high-precision log10 value.
inline ScaledDecimal scaled_from_log10(const Decimal& log_value) {
    if (!boost::multiprecision::isfinite(log_value)) {
        throw std::domain_error("scaled_from_log10: non-finite input");
    }
    const Decimal whole = boost::multiprecision::floor(log_value);
    const Decimal fraction = log_value - whole;
    return ScaledDecimal::from_parts(boost::multiprecision::pow(Decimal{10}, fraction),
                                     whole.convert_to<std::int64_t>());
}

inline ScaledDecimal scaled_from_log10(double log_value) {
    if (!std::isfinite(log_value)) {
        throw std::domain_error("scaled_from_log10: non-finite input");
    }
    return scaled_from_log10(Decimal{log_value});
}

/// log10 of a positive value, carried at working precision.
inline Decimal log10(const ScaledDecimal& x) {
    if (x.is_zero()) {
        throw std::domain_error("log10: zero has no logarithm");
    }
    return Decimal{x.exponent()} + boost::multiprecision::log10(x.mantissa());
}

inline ScaledDecimal scaled_mul(const ScaledDecimal& a, const ScaledDecimal& b) {
    if (a.is_zero() || b.is_zero()) {
        return ScaledDecimal::zero();
    }
    return ScaledDecimal::from_parts(a.mantissa() * b.mantissa(), a.exponent() + b.exponent());
}

inline ScaledDecimal operator*(const ScaledDecimal& a, const ScaledDecimal& b) { return scaled_mul(a, b); }

/// base^exp by repeated squaring; the exponent of the result is exact.
inline ScaledDecimal scaled_int_pow(std::uint64_t base, std::uint64_t exp) {
    if (base == 0) {
        throw std::invalid_argument("scaled_int_pow: base must be >= 1");
    }
    ScaledDecimal result = ScaledDecimal::one();
    ScaledDecimal square = ScaledDecimal::from_integer(base);
    while (exp != 0) {
        if ((exp & 1U) != 0) {
            result = scaled_mul(result, square);
        }
        exp >>= 1U;
        if (exp != 0) {
            square = scaled_mul(square, square);
        }
    }
    return result;
}

inline ScaledDecimal reciprocal(const ScaledDecimal& x) {
    if (x.is_zero()) {
        throw std::domain_error("reciprocal: division by zero");
    }
    return ScaledDecimal::from_parts(detail::round_to_working_precision(Decimal{1} / x.mantissa()), -x.exponent());
}

/// Scales by 1/divisor; used for unit conversions with positive constants.
inline ScaledDecimal scaled_div(const ScaledDecimal& x, double divisor) {
    if (!(divisor > 0) || !std::isfinite(divisor)) {
        throw std::invalid_argument("scaled_div: divisor must be positive and finite");
    }
    if (x.is_zero()) {
        return x;
    }
    return ScaledDecimal::from_parts(detail::round_to_working_precision(x.mantissa() / Decimal{divisor}),
                                     x.exponent());
}

/// Nearest double; saturates to infinity or zero outside the double range.
inline double to_double(const ScaledDecimal& x) {
    if (x.is_zero()) {
        return 0.0;
    }
    if (x.exponent() > std::numeric_limits<double>::max_exponent10) {
        return std::numeric_limits<double>::infinity();
    }
    if (x.exponent() < std::numeric_limits<double>::min_exponent10 - 20) {
        return 0.0;
    }
    const Decimal scaled =
        x.mantissa() * boost::multiprecision::pow(Decimal{10}, static_cast<int>(x.exponent()));
    return scaled.convert_to<double>();
}

/// |a - b| / |b|, computed without leaving scaled form.
inline double relative_difference(const ScaledDecimal& a, const ScaledDecimal& b) {
    if (b.is_zero()) {
        return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (a.is_zero()) {
        return 1.0;
    }
    const std::int64_t gap = a.exponent() - b.exponent();
    if (gap > 300 || gap < -300) {
        return gap > 0 ? std::numeric_limits<double>::infinity() : 1.0;
    }
    const Decimal ratio =
        (a.mantissa() / b.mantissa()) * boost::multiprecision::pow(Decimal{10}, static_cast<int>(gap));
    return boost::multiprecision::abs(ratio - 1).convert_to<double>();
}

namespace detail {

// Rounds the mantissa to `digits` significant figures; returns digits text and
// the (possibly carried) exponent.
inline std::pair<std::string, std::int64_t> rounded_mantissa(const ScaledDecimal& x, int digits) {
    if (digits < 1) {
        throw std::invalid_argument("significant digits must be >= 1");
    }
    if (x.is_zero()) {
        return {std::string(digits > 1 ? "0." + std::string(static_cast<std::size_t>(digits - 1), '0') : "0"), 0};
    }
    std::string text = x.mantissa().str(digits - 1, std::ios_base::fixed);
    std::int64_t exponent = x.exponent();
    if (text.rfind("10", 0) == 0) {
        // 9.9996 -> "10.000" at four digits
        text = ScaledDecimal::one().mantissa().str(digits - 1, std::ios_base::fixed);
        ++exponent;
    }
    return {text, exponent};
}

}  // namespace detail

/// Default textual form `<mantissa>e<exponent>`, e.g. `4.404e-71`.
inline std::string to_string(const ScaledDecimal& x, int digits = kDefaultSignificantDigits) {
    auto [mantissa, exponent] = detail::rounded_mantissa(x, digits);
    return mantissa + "e" + std::to_string(exponent);
}

/// Spreadsheet style with a decimal comma and signed two-digit exponent, e.g. `1,70E+10`.
inline std::string to_paper_string(const ScaledDecimal& x, int digits = 3) {
    auto [mantissa, exponent] = detail::rounded_mantissa(x, digits);
    for (char& c : mantissa) {
        if (c == '.') {
            c = ',';
        }
    }
    std::string exp_text = std::to_string(exponent < 0 ? -exponent : exponent);
    if (exp_text.size() < 2) {
        exp_text.insert(0, "0");
    }
    return mantissa + (exponent < 0 ? "E-" : "E+") + exp_text;
}

}  // namespace monkey
