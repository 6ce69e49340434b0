#include "stein/continued_fraction.hpp"

#include <stdexcept>

namespace stein {

ExtRational ContinuedFraction::evaluate() const {
    if (terms.empty()) throw std::invalid_argument("empty continued fraction");
    ExtRational acc(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
        acc = ExtRational(*it) - acc.reciprocal();
    }
    return acc;
}

bool ContinuedFraction::well_formed() const {
    if (terms.empty()) return false;
    for (std::size_t j = 1; j < terms.size(); ++j) {
        if (terms[j] > -2) return false;
    }
    return true;
}

ContinuedFraction neg_continued_fraction(const ExtRational& r) {
    if (r.is_infinite()) throw std::domain_error("continued fraction of infinity");
    ContinuedFraction cf;
    ExtRational x = r;
    for (;;) {
        Integer a = x.floor();
        cf.terms.push_back(a);
        ExtRational rest = ExtRational(a) - x;  // in (-1, 0]
        if (rest.is_zero()) break;
        x = rest.reciprocal();  // < -1
    }
    return cf;
}

}  // namespace stein
