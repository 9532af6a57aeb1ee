#ifndef DMV_RATIONAL_HPP
#define DMV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dmv {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always kept canonical (lowest terms, positive denominator).
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return numerator(r); }
inline Int den(const Rational& r) { return denominator(r); }

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "p/q" or the integer shorthand "p". Rejects q = 0.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw ParseError("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    std::size_t slash = text.find('/');
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!is_int(text)) bad();
            return Rational(Int(std::string(text)));
        }
        std::string_view p = text.substr(0, slash);
        std::string_view q = text.substr(slash + 1);
        if (!is_int(p) || !is_int(q)) bad();
        Int qi{std::string(q)};
        if (qi == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
        return Rational(Int(std::string(p)), qi);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        bad();
    }
    return Rational(0);  // unreachable
}

/// Exact rational confined to [0,1]; the carrier of the standard DMV-algebra.
class UnitRational {
public:
    UnitRational() : value_(0) {}

    explicit UnitRational(Rational v) : value_(std::move(v)) {
        if (value_ < 0 || value_ > 1)
            throw std::domain_error("UnitRational outside [0,1]: " + dmv::to_string(value_));
    }

    UnitRational(const Int& p, const Int& q) : UnitRational(Rational(p, q)) {}
    UnitRational(long p, long q) : UnitRational(Rational(p, q)) {}

    static UnitRational zero() { return UnitRational(); }
    static UnitRational one() { return UnitRational(Rational(1)); }

    const Rational& value() const { return value_; }
    Int num() const { return numerator(value_); }
    Int den() const { return denominator(value_); }

    friend bool operator==(const UnitRational& a, const UnitRational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const UnitRational& a, const UnitRational& b) { return a.value_ != b.value_; }
    friend bool operator<(const UnitRational& a, const UnitRational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const UnitRational& a, const UnitRational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const UnitRational& a, const UnitRational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const UnitRational& a, const UnitRational& b) { return a.value_ >= b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const UnitRational& r) {
        return os << dmv::to_string(r.value_);
    }

private:
    Rational value_;
};

inline std::string to_string(const UnitRational& r) { return to_string(r.value()); }

/// Parses a rational literal and checks it lies in [0,1].
inline UnitRational parse_unit_rational(std::string_view text) {
    Rational r = parse_rational(text);
    if (r < 0 || r > 1)
        throw ParseError("rational outside [0,1]: '" + std::string(text) + "'");
    return UnitRational(std::move(r));
}

}  // namespace dmv

#endif
