#include "stein/invariants.hpp"

#include "stein/errors.hpp"
#include "stein/gf2.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace stein {

IntMatrix SteinPresentation::q_star() const {
    const std::size_t k = m();
    IntMatrix s(k + n1, k + n1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) s(i, j) = Q(i, j);
    for (std::size_t h = 0; h < n1; ++h)
        for (std::size_t j = 0; j < k; ++j) {
            s(k + h, j) = R(h, j);
            s(j, k + h) = R(h, j);
        }
    return s;
}

std::vector<std::string> SteinPresentation::violations() const {
    std::vector<std::string> out;
    if (Q.rows() != m() || Q.cols() != m()) out.push_back("Q is not m x m");
    else if (!Q.is_symmetric()) out.push_back("Q is not symmetric");
    if (R.rows() != n1 || R.cols() != m()) out.push_back("R is not n1 x m");
    if (!out.empty()) return out;
    const IntMatrix s = q_star();
    auto spins = characteristic_sublinks(*this);
    for (std::size_t i = 0; i < s.rows(); ++i) {
        Integer twice = i < m() ? rot[i] : Integer(0);
        for (std::size_t j = m(); j < s.rows(); ++j) twice += s(i, j);
        for (std::size_t j = 0; j < s.rows(); ++j)
            if (spins.front().sublink[j]) twice += s(i, j);
        if (boost::multiprecision::abs(twice) % 2 != 0)
            out.push_back("slot " + std::to_string(i + 1) + ": rotation parity makes rho non-integral");
    }
    return out;
}

SteinPresentation stein_presentation(const SurgeryPresentation& p) {
    std::vector<std::size_t> knots, handles;
    for (std::size_t i = 0; i < p.size(); ++i) (p.components[i].in_L0 ? handles : knots).push_back(i);
    SteinPresentation x;
    x.n1 = handles.size();
    x.Q = IntMatrix(knots.size(), knots.size());
    x.R = IntMatrix(handles.size(), knots.size());
    for (std::size_t a = 0; a < knots.size(); ++a) {
        const auto& c = p.components[knots[a]];
        if (!c.coefficient.is_integer())
            throw InvariantError("component " + std::to_string(knots[a] + 1) + ": coefficient must be an integer");
        if (!c.rot) throw InvariantError("component " + std::to_string(knots[a] + 1) + ": missing rotation number");
        x.rot.push_back(*c.rot);
        x.Q(a, a) = c.coefficient.num();
        for (std::size_t b = 0; b < knots.size(); ++b)
            if (a != b) x.Q(a, b) = p.linking(knots[a], knots[b]);
        for (std::size_t h = 0; h < handles.size(); ++h) x.R(h, a) = p.linking(handles[h], knots[a]);
    }
    for (std::size_t h = 0; h < handles.size(); ++h) {
        if (p.components[handles[h]].coefficient != ExtRational(0))
            throw InvariantError("component " + std::to_string(handles[h] + 1) + ": 1-handle unknot must be 0-framed");
        for (std::size_t g = h + 1; g < handles.size(); ++g)
            if (p.linking(handles[h], handles[g]) != 0)
                throw InvariantError("1-handle unknots " + std::to_string(handles[h] + 1) + " and " +
                                     std::to_string(handles[g] + 1) + " are linked");
    }
    return x;
}

SteinPresentation stein_presentation(const FrontDiagram& d) { return stein_presentation(surger_handles(d)); }

SteinPresentation disjoint_union(const SteinPresentation& a, const SteinPresentation& b) {
    SteinPresentation u;
    u.zero_handles = a.zero_handles + b.zero_handles;
    u.n1 = a.n1 + b.n1;
    const std::size_t m = a.m() + b.m();
    u.Q = IntMatrix(m, m);
    u.R = IntMatrix(u.n1, m);
    for (std::size_t i = 0; i < a.m(); ++i)
        for (std::size_t j = 0; j < a.m(); ++j) u.Q(i, j) = a.Q(i, j);
    for (std::size_t i = 0; i < b.m(); ++i)
        for (std::size_t j = 0; j < b.m(); ++j) u.Q(a.m() + i, a.m() + j) = b.Q(i, j);
    for (std::size_t h = 0; h < a.n1; ++h)
        for (std::size_t j = 0; j < a.m(); ++j) u.R(h, j) = a.R(h, j);
    for (std::size_t h = 0; h < b.n1; ++h)
        for (std::size_t j = 0; j < b.m(); ++j) u.R(a.n1 + h, a.m() + j) = b.R(h, j);
    u.rot = a.rot;
    u.rot.insert(u.rot.end(), b.rot.begin(), b.rot.end());
    return u;
}

std::string SpinStructure::str() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < sublink.size(); ++i) {
        if (!sublink[i]) continue;
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

IntVector chern_cocycle(const SteinPresentation& x) {
    IntVector c = x.rot;
    c.resize(x.m() + x.n1, 0);
    return c;
}

bool is_characteristic(const SteinPresentation& x, const SpinStructure& s) {
    const IntMatrix q = x.q_star();
    if (s.sublink.size() != q.rows()) return false;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        Integer sum = -q(i, i);
        for (std::size_t j = 0; j < q.rows(); ++j)
            if (s.sublink[j]) sum += q(i, j);
        if (boost::multiprecision::abs(sum) % 2 != 0) return false;
    }
    return true;
}

std::vector<SpinStructure> characteristic_sublinks(const SteinPresentation& x) {
    const IntMatrix q = x.q_star();
    const std::size_t n = q.rows();
    BitMatrix a(n, BitVector(n));
    BitVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<std::uint8_t>(boost::multiprecision::abs(q(i, j)) % 2);
        b[i] = a[i][i];
    }
    Gf2AffineSpace space = solve_gf2_affine(a, b, n);
    if (!space.consistent) throw std::logic_error("characteristic_sublinks: diagonal outside the mod 2 image");
    std::vector<SpinStructure> out;
    for (const auto& v : space.enumerate()) {
        SpinStructure s;
        for (auto bit : v) s.sublink.push_back(bit != 0);
        out.push_back(std::move(s));
    }
    return out;
}

GammaValue gamma(const SteinPresentation& x, const SpinStructure& s) {
    if (!is_characteristic(x, s)) throw std::invalid_argument("sublink " + s.str() + " is not characteristic");
    const IntMatrix q = x.q_star();
    const IntVector c = chern_cocycle(x);
    GammaValue g;
    for (std::size_t i = 0; i < q.rows(); ++i) {
        Integer twice = c[i];
        for (std::size_t j = x.m(); j < q.rows(); ++j) twice += q(i, j);
        for (std::size_t j = 0; j < q.rows(); ++j)
            if (s.sublink[j]) twice += q(i, j);
        if (boost::multiprecision::abs(twice) % 2 != 0)
            throw InvariantError("slot " + std::to_string(i + 1) +
                                 ": tb + r + 1 disagrees in parity with the 1-handle passages");
        g.rho.push_back(twice / 2);
    }
    g.cls = cokernel_class(smith_normal_form(q), g.rho);
    return g;
}

int euler_characteristic(const SteinPresentation& x) {
    return static_cast<int>(x.zero_handles) - static_cast<int>(x.n1) + static_cast<int>(x.m());
}

int signature(const SteinPresentation& x) {
    const auto basis = integer_kernel_basis(x.R);
    if (basis.empty()) return 0;
    IntMatrix b(x.m(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t i = 0; i < x.m(); ++i) b(i, k) = basis[k][i];
    return signature(b.transpose() * x.Q * b);
}

std::optional<ExtRational> theta(const SteinPresentation& x) {
    const IntVector c = chern_cocycle(x);
    RatVector rc(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) rc[i] = ExtRational(c[i]);
    auto y = solve_rational(to_rational(x.q_star()), rc);
    if (!y) return std::nullopt;
    ExtRational square(0);
    for (std::size_t i = 0; i < c.size(); ++i) square += (*y)[i] * rc[i];
    return square - ExtRational(2 * euler_characteristic(x) + 3 * signature(x));
}

Integer FramedTheta::residue() const {
    if (d == 0) return value;
    return mod_floor(value, 2 * d);
}

std::string FramedTheta::str() const {
    if (d == 0) return value.str();
    return value.str() + " mod " + Integer(2 * d).str();
}

FramedTheta theta_f0_and_d(const SteinPresentation& x) {
    FramedTheta t;
    const CokernelElement c = cokernel_class(smith_normal_form(x.q_star()), chern_cocycle(x));
    t.d = 0;
    for (std::size_t i = 0; i < c.moduli.size(); ++i)
        if (c.moduli[i] == 0) t.d = boost::multiprecision::gcd(t.d, c.coordinates[i]);
    t.d = boost::multiprecision::abs(t.d);
    t.value = -2 * euler_characteristic(x) - 3 * signature(x);
    return t;
}

PlaneFieldInvariants plane_field_invariants(const SteinPresentation& x, const SpinStructure& s) {
    PlaneFieldInvariants p;
    p.chern = chern_cocycle(x);
    p.gamma = gamma(x, s);
    p.theta = theta(x);
    p.theta_f0 = theta_f0_and_d(x);
    p.d = p.theta_f0.d;
    return p;
}

}  // namespace stein
