#include "stein/mobius.hpp"

#include <stdexcept>

namespace stein {

MobiusMap::MobiusMap(Integer a_, Integer b_, Integer c_, Integer d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (a * d - b * c != 1) throw std::invalid_argument("MobiusMap: determinant must be 1");
}

ExtRational MobiusMap::apply(const ExtRational& r) const {
    if (r.is_infinite()) {
        if (b == 0) return ExtRational::infinity();
        return ExtRational(d, b);
    }
    Integer x = a * r.den() + b * r.num();
    Integer y = c * r.den() + d * r.num();
    if (x == 0) return ExtRational::infinity();
    return ExtRational(y, x);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d, -b, -c, a); }

MobiusMap MobiusMap::canonical() const {
    bool flip = a < 0 || (a == 0 && b < 0);
    if (!flip) return *this;
    MobiusMap m;
    m.a = -a;
    m.b = -b;
    m.c = -c;
    m.d = -d;
    return m;
}

MobiusMap operator*(const MobiusMap& x, const MobiusMap& y) {
    MobiusMap m;
    m.a = x.a * y.a + x.b * y.c;
    m.b = x.a * y.b + x.b * y.d;
    m.c = x.c * y.a + x.d * y.c;
    m.d = x.c * y.b + x.d * y.d;
    return m;
}

bool operator==(const MobiusMap& x, const MobiusMap& y) {
    MobiusMap p = x.canonical();
    MobiusMap q = y.canonical();
    return p.a == q.a && p.b == q.b && p.c == q.c && p.d == q.d;
}

std::string MobiusMap::str() const {
    return "[" + a.str() + "," + b.str() + ";" + c.str() + "," + d.str() + "]";
}

}  // namespace stein
