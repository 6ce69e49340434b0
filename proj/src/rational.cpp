#include "stein/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace stein {

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Integer q = a / b;
    Integer r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

Integer mod_floor(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

std::string to_string(const Integer& n) { return n.str(); }

ExtRational::ExtRational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) {
        if (num_ == 0) throw std::domain_error("ExtRational: 0/0");
        num_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExtRational ExtRational::infinity() { return ExtRational(Integer(1), Integer(0)); }

int ExtRational::sign() const {
    if (is_infinite()) return 0;
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Integer ExtRational::floor() const {
    if (is_infinite()) throw std::domain_error("floor of infinity");
    return floor_div(num_, den_);
}

ExtRational ExtRational::frac() const {
    if (is_infinite()) throw std::domain_error("fractional part of infinity");
    return ExtRational(mod_floor(num_, den_), den_);
}

ExtRational ExtRational::reciprocal() const {
    if (is_infinite()) return ExtRational();
    if (num_ == 0) return infinity();
    return ExtRational(den_, num_);
}

ExtRational ExtRational::operator-() const {
    if (is_infinite()) return *this;
    ExtRational r = *this;
    r.num_ = -r.num_;
    return r;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) throw std::domain_error("addition with infinity");
    return ExtRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) { return a + (-b); }

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) throw std::domain_error("multiplication with infinity");
    return ExtRational(a.num_ * b.num_, a.den_ * b.den_);
}

ExtRational operator/(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) throw std::domain_error("division with infinity");
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return ExtRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) throw std::domain_error("ordering with infinity");
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExtRational::str() const {
    if (is_infinite()) return "inf";
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

namespace {

Integer parse_integer(std::string_view t, std::string_view whole) {
    std::size_t i = 0;
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) throw std::invalid_argument("malformed rational: " + std::string(whole));
    for (std::size_t k = i; k < t.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(t[k])))
            throw std::invalid_argument("malformed rational: " + std::string(whole));
    }
    std::string s(t[0] == '+' ? t.substr(1) : t);
    return Integer(s);
}

}  // namespace

ExtRational ExtRational::parse(std::string_view text) {
    if (text == "inf" || text == "-inf" || text == "+inf" || text == "1/0") return infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExtRational(parse_integer(text, text));
    Integer p = parse_integer(text.substr(0, slash), text);
    Integer q = parse_integer(text.substr(slash + 1), text);
    if (p == 0 && q == 0) throw std::invalid_argument("malformed rational: 0/0");
    return ExtRational(p, q);
}

std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

std::pair<Integer, ExtRational> floor_frac(const ExtRational& r) {
    if (r.is_infinite()) throw std::domain_error("floor_frac: infinite argument");
    return {r.floor(), r.frac()};
}

bool Interval::contains(const ExtRational& r) const {
    if (r.is_infinite()) {
        bool lo_hit = lo.kind != Bound::Kind::finite && lo.closed;
        bool hi_hit = hi.kind != Bound::Kind::finite && hi.closed;
        return lo_hit || hi_hit;
    }
    switch (lo.kind) {
        case Bound::Kind::pos_inf: return false;
        case Bound::Kind::finite:
            if (lo.closed ? r < lo.value : r <= lo.value) return false;
            break;
        case Bound::Kind::neg_inf: break;
    }
    switch (hi.kind) {
        case Bound::Kind::neg_inf: return false;
        case Bound::Kind::finite:
            if (hi.closed ? r > hi.value : r >= hi.value) return false;
            break;
        case Bound::Kind::pos_inf: break;
    }
    return true;
}

}  // namespace stein
