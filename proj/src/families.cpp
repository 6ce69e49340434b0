#include "stein/families.hpp"

#include <boost/integer/extended_euclidean.hpp>
#include <boost/integer/mod_inverse.hpp>
#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stein {

namespace {

const Interval kSlopeS{Bound::open_at(-1), Bound::closed_at(0)};
const Interval kBelowMinusOne{Bound::minus_inf(true), Bound::open_at(-1)};
const Interval kNonnegative{Bound::closed_at(0), Bound::plus_inf(true)};
const Interval kMinusOneToZero{Bound::closed_at(-1), Bound::open_at(0)};
const Interval kOpenBelowMinusOne{Bound::minus_inf(false), Bound::open_at(-1)};

bool below(const ExtRational& x, const ExtRational& bound) {
    return x.is_infinite() || x < bound;
}

ExtRational neg_inverse(const ExtRational& r) { return -r.reciprocal(); }

}  // namespace

std::string SeifertBase::str() const { return (orientable ? "o" : "n") + std::to_string(genus); }

SeifertBase SeifertBase::parse(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'o' && text[0] != 'n'))
        throw std::invalid_argument("base must be o<genus> or n<genus>");
    SeifertBase b;
    b.orientable = text[0] == 'o';
    std::size_t used = 0;
    b.genus = std::stoi(text.substr(1), &used);
    if (used != text.size() - 1 || b.genus < 0 || (!b.orientable && b.genus < 1))
        throw std::invalid_argument("bad base genus in '" + text + "'");
    return b;
}

SeifertData seifert_from_invariants(const SeifertBase& base, const std::vector<std::pair<Integer, Integer>>& pq) {
    if (!base.orientable) throw std::invalid_argument("Seifert invariants are only converted over orientable bases");
    SeifertData s{base, {}};
    for (const auto& [p, q] : pq) s.coefficients.emplace_back(p, q);
    return s;
}

SeifertNormalForm seifert_normalize(const SeifertData& s) {
    SeifertNormalForm n;
    n.e = ExtRational(s.base.orientable ? 0 : -2 * s.base.genus);
    n.e0 = 0;
    for (const auto& r : s.coefficients) {
        if (r.is_zero()) throw std::invalid_argument("Seifert coefficient 0");
        const ExtRational x = neg_inverse(r);
        n.e += x;
        auto [fl, fr] = floor_frac(x);
        n.e0 += fl;
        n.rprime.push_back(neg_inverse(fr));
        if (!x.is_integer()) ++n.k0;
    }
    return n;
}

SeifertData reverse_orientation(const SeifertData& s) {
    SeifertData r = s;
    for (auto& c : r.coefficients) c = -c;
    return r;
}

SurgeryPresentation seifert_presentation(const SeifertData& s) {
    if (!s.base.is_sphere()) throw std::invalid_argument("surgery presentation only for a sphere base");
    SurgeryPresentation p;
    p.add_component(SurgeryComponent{ExtRational(0), true, false, {}, {}});
    for (const auto& r : s.coefficients) p.add_component(SurgeryComponent{r, true, false, {}, {}}, {1});
    return p;
}

bool NValue::exceeds(const ExtRational& rprime) const {
    return infinite || below(rprime, ExtRational(value));
}

std::string NValue::str() const { return infinite ? "inf" : value.str(); }

std::optional<NValue> n_for_map(const MobiusMap& A, const ExtRational& r1p, const ExtRational& r2p) {
    const ExtRational s = (ExtRational(-1) - r1p.reciprocal()).reciprocal();
    const ExtRational as = A.apply(s);
    if (!kSlopeS.contains(as)) return std::nullopt;
    const ExtRational ar2 = A.apply(r2p);
    if (!kBelowMinusOne.contains(ar2)) return std::nullopt;
    const ExtRational a0 = A.apply(ExtRational(0));
    ExtRational t(0);
    if (kNonnegative.contains(a0)) t = ExtRational(0);
    else if (kMinusOneToZero.contains(a0)) t = as.reciprocal();
    else if (kOpenBelowMinusOne.contains(a0)) t = ar2;
    const Integer abs_a = boost::multiprecision::abs(A.a), abs_c = boost::multiprecision::abs(A.c);
    const Integer big = std::max(abs_a, abs_c), small = std::min(abs_a, abs_c);
    NValue v;
    if (t.is_infinite() && small > 0) {
        v.infinite = true;
        return v;
    }
    const Integer fl = t.is_infinite() ? Integer(0) : t.floor();
    v.value = -small * (fl + 1) - big;
    return v;
}

NFunctionResult n_function(const ExtRational& r1p, const ExtRational& r2p, long long search_bound) {
    if (!kBelowMinusOne.contains(r1p) || !kBelowMinusOne.contains(r2p))
        throw std::invalid_argument("n_function arguments must lie in [-inf,-1)");
    if (search_bound < 1) throw std::invalid_argument("search bound must be positive");
    NFunctionResult out;
    const ExtRational s = (ExtRational(-1) - r1p.reciprocal()).reciprocal();
    if (s == r2p) {
        out.kind = NFunctionResult::Kind::sentinel;
        return out;
    }
    auto consider = [&](long long a, long long b, long long c, long long d) {
        MobiusMap A(a, b, c, d);
        auto v = n_for_map(A, r1p, r2p);
        if (!v) return;
        bool better = false;
        if (out.kind == NFunctionResult::Kind::none) better = true;
        else if (v->infinite != out.bound.infinite) better = v->infinite;
        else if (!v->infinite && v->value != out.bound.value) better = v->value > out.bound.value;
        if (!better) return;
        out.kind = NFunctionResult::Kind::lower_bound;
        out.bound = *v;
        out.witness = A;
    };
    const long long B = search_bound;
    auto floor_ll = [](long long x, long long y) { return x / y - ((x % y != 0) && ((x < 0) != (y < 0))); };
    for (long long d = -B; d <= B; ++d) consider(0, 1, -1, d);
    for (long long a = 1; a <= B; ++a)
        for (long long b = -B; b <= B; ++b) {
            if (std::gcd(a, b) != 1) continue;
            if (b == 0) {
                for (long long c = -B; c <= B; ++c) consider(1, 0, c, 1);
                continue;
            }
            auto eg = boost::integer::extended_euclidean(a, b < 0 ? -b : b);
            const long long d0 = eg.x;
            const long long c0 = b < 0 ? eg.y : -eg.y;
            const long long klo = -floor_ll(B + c0, a);
            const long long khi = floor_ll(B - c0, a);
            std::vector<std::pair<long long, long long>> cds;
            for (long long k = klo; k <= khi; ++k) {
                long long c = c0 + k * a, d = d0 + k * b;
                if (c < -B || c > B || d < -B || d > B) continue;
                cds.emplace_back(c, d);
            }
            std::sort(cds.begin(), cds.end());
            for (auto [c, d] : cds) consider(a, b, c, d);
        }
    return out;
}

Integer closed_form_ell(const ExtRational& r1p) {
    const ExtRational x = r1p.reciprocal() + ExtRational(1);
    return -x.reciprocal().floor() - 1;
}

std::string SeifertDecision::str() const {
    switch (reason) {
        case Reason::base: return "YES(a)";
        case Reason::e0: return "YES(b)";
        case Reason::fibers: return "YES(c)";
        case Reason::none: break;
    }
    return "UNKNOWN";
}

SeifertDecision decide_seifert(const SeifertData& s, long long search_bound) {
    SeifertDecision out;
    if (!s.base.is_sphere()) {
        out.reason = SeifertDecision::Reason::base;
        return out;
    }
    const SeifertNormalForm n = seifert_normalize(s);
    if (n.e0 != -1) {
        out.reason = SeifertDecision::Reason::e0;
        return out;
    }
    const auto& rp = n.rprime;
    const std::size_t k = rp.size();
    auto fibers = [&](SeifertDecision::Path path) {
        out.reason = SeifertDecision::Reason::fibers;
        out.path = path;
        return out;
    };
    if (k <= 2) return fibers(SeifertDecision::Path::few_fibers);
    if (std::all_of(rp.begin(), rp.end(), [](const ExtRational& r) { return below(r, ExtRational(-2)); }))
        return fibers(SeifertDecision::Path::all_below_minus_two);
    for (std::size_t i = 0; i < k; ++i) {
        const ExtRational ell(closed_form_ell(rp[i]));
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j)
            if (j != i) ok = below(rp[j], ell);
        if (ok) {
            out.first = i;
            out.second = i == 0 ? 1 : 0;
            return fibers(SeifertDecision::Path::closed_form);
        }
    }
    std::vector<long long> bounds;
    for (long long b = 2; b < search_bound; b *= 4) bounds.push_back(b);
    bounds.push_back(search_bound);
    for (long long bound : bounds)
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (i == j) continue;
                NFunctionResult r = n_function(rp[i], rp[j], bound);
                out.first = i;
                out.second = j;
                if (r.kind == NFunctionResult::Kind::sentinel) return fibers(SeifertDecision::Path::sentinel);
                if (r.kind != NFunctionResult::Kind::lower_bound) continue;
                bool ok = true;
                for (std::size_t l = 0; l < k && ok; ++l)
                    if (l != i && l != j) ok = r.bound.exceeds(rp[l]);
                if (ok) {
                    out.witness = r.witness;
                    out.bound = r.bound;
                    return fibers(SeifertDecision::Path::search);
                }
            }
    out.first = out.second = 0;
    return out;
}

SeifertData brieskorn(const Integer& p1, const Integer& p2, const Integer& p3, int c) {
    const std::array<Integer, 3> p{p1, p2, p3};
    for (const auto& x : p)
        if (x < 2) throw std::invalid_argument("Brieskorn multiplicities must be at least 2");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (boost::multiprecision::gcd(p[i], p[j]) != 1)
                throw std::invalid_argument("Brieskorn multiplicities must be pairwise coprime");
    if (c != 1 && c != -1) throw std::invalid_argument("orientation must be +1 or -1");
    auto first_two = [&](int i) {
        const Integer& pi = p[static_cast<std::size_t>(i)];
        Integer others = p[0] * p[1] * p[2] / pi;
        Integer inv = boost::integer::mod_inverse(Integer(mod_floor(others, pi)), pi);
        Integer q = mod_floor(Integer(c) * inv, pi);
        return q - pi;  // in (-p_i, 0)
    };
    const Integer q1 = first_two(0), q2 = first_two(1);
    const Integer q3 = (Integer(c) - q1 * p2 * p3 - p1 * q2 * p3) / (p1 * p2);
    SeifertData s;
    s.coefficients = {ExtRational(p1, q1), ExtRational(p2, q2), ExtRational(p3, q3)};
    return s;
}

Integer brieskorn_c(const SeifertData& s) {
    if (s.coefficients.size() != 3) throw std::invalid_argument("brieskorn_c needs three coefficients");
    std::array<Integer, 3> p, q;
    for (std::size_t i = 0; i < 3; ++i) {
        const ExtRational& r = s.coefficients[i];
        if (r.is_infinite() || r.is_zero()) throw std::invalid_argument("brieskorn_c needs finite nonzero coefficients");
        p[i] = boost::multiprecision::abs(r.num());
        q[i] = r.sign() * r.den();
    }
    return q[0] * p[1] * p[2] + p[0] * q[1] * p[2] + p[0] * p[1] * q[2];
}

bool in_basic_brieskorn_family(const std::array<Integer, 3>& p) {
    for (std::size_t k = 0; k < 3; ++k) {
        Integer prod = p[(k + 1) % 3] * p[(k + 2) % 3];
        Integer r = mod_floor(p[k], prod);
        if (r == 1 || r == prod - 1) return true;
    }
    return false;
}

std::optional<BrieskornFamilyMember> brieskorn_family(int family, long long ell, long long m, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    if (family < 1 || family > kBrieskornFamilies) throw std::invalid_argument("no such Brieskorn family");
    const long long L = ell, M = m, S = sign;
    using R = BrieskornFamilyMember::Reason;
    struct Row {
        std::array<long long, 3> p, q;
        R reason;
    } row{};
    switch (family) {
        case 1:
            row = {{2, 4 * L + S, 2 * (4 * L + S) * M + 4 * L - S}, {1, -L, -(2 * L + S) * M - L}, R::closed_form};
            break;
        case 2:
            row = {{2, 4 * L + 3 * S, 2 * (4 * L + 3 * S) * M + 4 * L + S},
                   {1, -L - S, -(2 * L + S) * M - L},
                   R::closed_form};
            break;
        case 3: row = {{2, 14 * M + 3 * S, 7}, {1, -5 * M - S, -1}, R::matrix}; break;
        case 4: row = {{2, 18 * M + 5 * S, 9}, {1, -7 * M - 2 * S, -1}, R::matrix}; break;
        case 5: row = {{3, 4, 12 * M + 5 * S}, {2, -1, -5 * M - 2 * S}, R::all_below_minus_two}; break;
        case 6: row = {{3, 5, 15 * M + 2 * S}, {-1, -1, 8 * M + S}, R::all_below_minus_two}; break;
        case 7: row = {{3, 5, 15 * M + 4 * S}, {2, -2, -4 * M - S}, R::all_below_minus_two}; break;
        default: row = {{3, 5, 15 * M + 7 * S}, {1, -1, -2 * M - S}, R::closed_form}; break;
    }
    BrieskornFamilyMember out;
    out.family = family;
    out.ell = ell;
    out.m = m;
    out.sign = sign;
    out.reason = row.reason;
    if (row.reason == R::matrix) out.matrix = MobiusMap(3, 1, 2, 1);
    for (std::size_t i = 0; i < 3; ++i) {
        if (row.p[i] < 2 || row.q[i] == 0) return std::nullopt;
        out.p[i] = row.p[i];
        out.data.coefficients.emplace_back(Integer(row.p[i]), Integer(row.q[i]));
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (std::gcd(row.p[i], row.p[j]) != 1) return std::nullopt;
    return out;
}

BorromeanMembership borromean_membership(const BorromeanCoeffs& c) {
    for (const auto& r : c.r)
        if (r.is_infinite()) throw std::invalid_argument("Borromean membership needs finite coefficients");
    const auto& r = c.r;
    static constexpr std::array<std::array<std::size_t, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto fl = [](const ExtRational& x) { return ExtRational(neg_inverse(x).floor()); };
    BorromeanMembership m;
    const Interval one_four{Bound::closed_at(1), Bound::open_at(4)};
    m.a0 = one_four.contains(r[0]) && one_four.contains(r[1]) && one_four.contains(r[2]);
    const Interval nonneg{Bound::closed_at(0), Bound::plus_inf(false)};
    const Interval third{Bound::closed_at(ExtRational(-1) / ExtRational(3)), Bound::open_at(0)};
    for (const auto& p : perms) {
        const ExtRational &x = r[p[0]], &y = r[p[1]], &z = r[p[2]];
        if (!nonneg.contains(x) || !third.contains(y)) continue;
        const Interval tail{Bound::closed_at(ExtRational(-2) * fl(y) - ExtRational(1)), Bound::open_at(-6)};
        if (tail.contains(z)) m.a2 = true;
    }
    bool all = true;
    for (const auto& p : perms) {
        const ExtRational &x = r[p[0]], &y = r[p[1]], &z = r[p[2]];
        if (!(x < ExtRational(0)) || !(y < ExtRational(0))) {
            all = false;
            break;
        }
        const Interval tail{Bound::closed_at(ExtRational(-2) * (fl(x) + fl(y) + ExtRational(1))), Bound::open_at(0)};
        if (!tail.contains(z)) {
            all = false;
            break;
        }
    }
    if (all) {
        const Interval six{Bound::closed_at(-6), Bound::open_at(0)};
        const Interval one{Bound::closed_at(-1), Bound::open_at(0)};
        int near = 0;
        bool boxed = true;
        for (const auto& x : r) {
            boxed = boxed && six.contains(x);
            near += one.contains(x);
        }
        m.a3 = !(boxed && near >= 2);
    }
    return m;
}

std::string BorromeanDecision::str() const { return yes ? "YES" : "UNKNOWN"; }

BorromeanDecision decide_borromean(const BorromeanCoeffs& c) {
    BorromeanDecision d;
    for (const auto& r : c.r)
        if (r.is_infinite()) d.lens_sum = true;
    if (d.lens_sum) {
        d.yes = true;
        return d;
    }
    d.membership = borromean_membership(c);
    d.yes = !d.membership.any();
    return d;
}

SurgeryPresentation borromean_presentation(const BorromeanCoeffs& c) {
    SurgeryPresentation p;
    for (const auto& r : c.r) p.add_component(SurgeryComponent{r, true, false, {}, {}});
    return p;
}

BorromeanCoeffs twist_knot_coefficients(const Integer& l, const Integer& m, const ExtRational& r) {
    return {{neg_inverse(ExtRational(l)), neg_inverse(ExtRational(m)), r}};
}

BorromeanCoeffs two_component_coefficients(const Integer& m, const ExtRational& r1, const ExtRational& r2) {
    return {{neg_inverse(ExtRational(m)), r1, r2}};
}

}  // namespace stein
