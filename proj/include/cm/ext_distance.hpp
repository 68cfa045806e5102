#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

#include "cm/errors.hpp"

namespace cm {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact nonnegative rational extended with a saturating infinity.
///
/// All distances, ratios and moduli in this library are ExtDistance values;
/// the definitions being decided hinge on strict inequalities, so verdicts
/// never touch floating point.
class ExtDistance {
public:
    ExtDistance() : value_(0), infinite_(false) {}

    ExtDistance(const BigRational& v) : value_(v), infinite_(false) {
        if (v < 0) throw ParseError("negative distance");
    }

    ExtDistance(std::int64_t num, std::int64_t den) : ExtDistance(BigRational(num, den)) {}

    ExtDistance(std::int64_t v) : ExtDistance(BigRational(v)) {}

    static ExtDistance infinity() {
        ExtDistance d;
        d.infinite_ = true;
        return d;
    }

    static ExtDistance zero() { return ExtDistance(); }

    bool is_infinite() const { return infinite_; }
    bool is_zero() const { return !infinite_ && value_ == 0; }

    /// Finite value; throws if infinite.
    const BigRational& value() const {
        if (infinite_) throw Error("infinite distance has no rational value");
        return value_;
    }

    friend bool operator==(const ExtDistance& a, const ExtDistance& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }

    /// Infinity compares strictly greater than every finite value;
    /// infinity < infinity is false.
    friend bool operator<(const ExtDistance& a, const ExtDistance& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }

    friend bool operator>(const ExtDistance& a, const ExtDistance& b) { return b < a; }
    friend bool operator<=(const ExtDistance& a, const ExtDistance& b) { return !(b < a); }
    friend bool operator>=(const ExtDistance& a, const ExtDistance& b) { return !(a < b); }
    friend bool operator!=(const ExtDistance& a, const ExtDistance& b) { return !(a == b); }

    /// Addition saturates at infinity.
    friend ExtDistance operator+(const ExtDistance& a, const ExtDistance& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtDistance(a.value_ + b.value_);
    }

    friend ExtDistance operator*(const ExtDistance& a, const ExtDistance& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return ExtDistance(a.value_ * b.value_);
    }

    /// Exact ratio a/b for finite positive b; a finite numerator over an
    /// infinite denominator is 0.  Infinite over infinite and anything over
    /// zero are rejected; callers decide those cases before dividing.
    friend ExtDistance ratio(const ExtDistance& a, const ExtDistance& b) {
        if (b.infinite_) {
            if (a.infinite_) throw Error("ratio inf/inf is undefined");
            return zero();
        }
        if (b.value_ == 0) throw Error("ratio with zero denominator");
        if (a.infinite_) return infinity();
        return ExtDistance(a.value_ / b.value_);
    }

    /// Serialized form used in every JSON report: "p", "p/q" or "inf".
    std::string str() const {
        if (infinite_) return "inf";
        std::string s = numerator(value_).str();
        if (denominator(value_) != 1) s += "/" + denominator(value_).str();
        return s;
    }

    /// Parses "p", "p/q" or "inf".  Rejects floats and negatives.
    static ExtDistance parse(const std::string& s);

private:
    BigRational value_;
    bool infinite_;
};

} // namespace cm
