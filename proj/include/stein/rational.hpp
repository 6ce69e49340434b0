#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace stein {

using Integer = boost::multiprecision::cpp_int;

Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);
std::string to_string(const Integer& n);

// Exact rational extended by one projective point at infinity (stored as 1/0).
class ExtRational {
public:
    ExtRational() : num_(0), den_(1) {}
    ExtRational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    ExtRational(const Integer& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    ExtRational(Integer n, Integer d);

    static ExtRational infinity();

    bool is_infinite() const { return den_ == 0; }
    bool is_finite() const { return den_ != 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return den_ != 0 && num_ == 0; }
    int sign() const;  // 0 for infinity

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    Integer floor() const;
    ExtRational frac() const;
    ExtRational reciprocal() const;  // 0 <-> inf
    ExtRational operator-() const;

    friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
    friend ExtRational operator/(const ExtRational& a, const ExtRational& b);
    ExtRational& operator+=(const ExtRational& o) { return *this = *this + o; }
    ExtRational& operator-=(const ExtRational& o) { return *this = *this - o; }
    ExtRational& operator*=(const ExtRational& o) { return *this = *this * o; }
    ExtRational& operator/=(const ExtRational& o) { return *this = *this / o; }

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    // Total order on finite values; infinity is rejected (use Interval for that).
    friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);

    std::string str() const;
    static ExtRational parse(std::string_view text);

private:
    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const ExtRational& r);

// floor_frac(r) = (q, f) with r = q + f and 0 <= f < 1.
std::pair<Integer, ExtRational> floor_frac(const ExtRational& r);

// Interval of the extended line written with signed infinities.  The single
// point at infinity is a member exactly when one end is an infinite closed end,
// so [-inf,-1) and [0,inf] contain it while (-inf,-1) and [0,inf) do not.
struct Bound {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind = Kind::finite;
    ExtRational value;
    bool closed = false;

    static Bound closed_at(const ExtRational& v) { return {Kind::finite, v, true}; }
    static Bound open_at(const ExtRational& v) { return {Kind::finite, v, false}; }
    static Bound minus_inf(bool closed) { return {Kind::neg_inf, {}, closed}; }
    static Bound plus_inf(bool closed) { return {Kind::pos_inf, {}, closed}; }
};

struct Interval {
    Bound lo;
    Bound hi;
    bool contains(const ExtRational& r) const;
};

}  // namespace stein
