#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <utility>

#include "rcdkit/errors.hpp"

namespace rcdkit {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, kept in lowest terms with a positive denominator.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long value) : num_(value), den_(1) {}

    Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw Error(Errc::malformed_document, "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    bool negative() const { return num_ < 0; }

    Rat abs() const { return num_ < 0 ? Rat(-num_, den_) : *this; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw Error(Errc::zero_mass_event, "division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    BigInt num_;
    BigInt den_;
};

// Accepts "p/q" or a bare integer, with optional leading '-'.
Rat parse_rational(std::string_view text);

// Accepts plain and scientific decimal notation ("0.25", "1e-9", "2.5E-3").
Rat parse_decimal(std::string_view text);

// Equality semantics for the two numeric modes.  Exact mode compares values;
// tolerance mode compares within a caller-supplied epsilon.  All arithmetic
// stays rational either way; only comparisons are affected.
struct NumericMode {
    bool exact = true;
    Rat epsilon = Rat(0);

    static NumericMode exact_mode() { return NumericMode{}; }
    static NumericMode within(Rat eps) { return NumericMode{false, std::move(eps)}; }

    bool eq(const Rat& a, const Rat& b) const {
        if (exact) return a == b;
        return (a - b).abs() <= epsilon;
    }
    bool is_zero(const Rat& a) const { return eq(a, Rat(0)); }
    bool is_one(const Rat& a) const { return eq(a, Rat(1)); }
};

}  // namespace rcdkit
