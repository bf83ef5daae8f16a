#include "suffcheck/rational.hpp"

#include <cstdlib>
#include <limits>

namespace suffcheck {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(i128 v) {
    if (v > i128(std::numeric_limits<std::int64_t>::max()) ||
        v < i128(std::numeric_limits<std::int64_t>::min())) {
        raise(ErrorCode::Overflow, "rational value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

Rational Rational::make(i128 numerator, i128 denominator) {
    if (denominator == 0) {
        raise(ErrorCode::InvalidArgument, "rational denominator must be nonzero");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    if (numerator == 0) {
        return Rational();
    }
    u128 g = gcd128(abs128(numerator), u128(denominator));
    numerator /= i128(g);
    denominator /= i128(g);
    Rational r;
    r.num_ = narrow(numerator);
    r.den_ = narrow(denominator);
    return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    *this = make(numerator, denominator);
}

Rational Rational::operator-() const noexcept {
    Rational r;
    r.num_ = -num_; // num_ > INT64_MIN is guaranteed: INT64_MIN never survives make()
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                          i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                          i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) {
        raise(ErrorCode::InvalidArgument, "division of rational by zero");
    }
    return Rational::make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    i128 lhs = i128(a.num_) * b.den_;
    i128 rhs = i128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view part) -> std::int64_t {
        if (part.empty()) {
            raise(ErrorCode::DataFormat, "empty integer in rational literal");
        }
        std::string buf(part);
        char* end = nullptr;
        errno = 0;
        long long v = std::strtoll(buf.c_str(), &end, 10);
        if (errno != 0 || end != buf.c_str() + buf.size()) {
            raise(ErrorCode::DataFormat, "bad rational literal: '" + buf + "'");
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    std::int64_t num = parse_int(text.substr(0, slash));
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        raise(ErrorCode::DataFormat, "rational literal with zero denominator");
    }
    return Rational(num, den);
}

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::InvalidCoordSet: return "InvalidCoordSet";
        case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
        case ErrorCode::TooManyVariables: return "TooManyVariables";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::SplitMismatch: return "SplitMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::VarIndexZero: return "VarIndexZero";
        case ErrorCode::ZeroGap: return "ZeroGap";
        case ErrorCode::DegenerateSplit: return "DegenerateSplit";
        case ErrorCode::UniverseMismatch: return "UniverseMismatch";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::DataFormat: return "DataFormat";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace suffcheck
