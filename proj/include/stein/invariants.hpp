#pragma once

#include "stein/front.hpp"
#include "stein/matrix.hpp"
#include "stein/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stein {

// A Stein handlebody in standard form: zero_handles 0-handles, n1 1-handles and
// m 2-handles attached along Legendrian knots K_1..K_m framed tb - 1.
struct SteinPresentation {
    std::size_t zero_handles = 1;
    std::size_t n1 = 0;
    IntMatrix Q;    // m x m
    IntMatrix R;    // n1 x m, signed runs of K_j over handle h
    IntVector rot;  // length m

    std::size_t m() const { return rot.size(); }
    // [[Q, R^T], [R, 0]]: the linking matrix after trading each 1-handle for a
    // 0-framed unknot.  Slots 0..m-1 are the knots, m..m+n1-1 the unknots.
    IntMatrix q_star() const;
    std::vector<std::string> violations() const;
};

// Knots are the components without in_L0 and need an integer coefficient and
// a rotation number; in_L0 components become the 1-handles.
SteinPresentation stein_presentation(const SurgeryPresentation& p);
SteinPresentation stein_presentation(const FrontDiagram& d);
SteinPresentation disjoint_union(const SteinPresentation& a, const SteinPresentation& b);

struct SpinStructure {
    std::vector<bool> sublink;  // over the m + n1 slots of q_star()
    std::string str() const;    // 1-based slot list, e.g. "{1,3}"
    friend bool operator==(const SpinStructure&, const SpinStructure&) = default;
};

IntVector chern_cocycle(const SteinPresentation& x);
bool is_characteristic(const SteinPresentation& x, const SpinStructure& s);
std::vector<SpinStructure> characteristic_sublinks(const SteinPresentation& x);

struct GammaValue {
    IntVector rho;
    CokernelElement cls;  // rho mod im(q_star()) in SNF coordinates
};

GammaValue gamma(const SteinPresentation& x, const SpinStructure& s);

// nullopt when c1 has infinite order.
std::optional<ExtRational> theta(const SteinPresentation& x);

int euler_characteristic(const SteinPresentation& x);
int signature(const SteinPresentation& x);

struct FramedTheta {
    Integer d;      // divisibility of c1 modulo torsion, 0 when c1 is torsion
    Integer value;  // -2 chi - 3 sigma, meaningful mod 2d
    Integer residue() const;  // value reduced into [0, 2d), or value itself when d = 0
    std::string str() const;
};

FramedTheta theta_f0_and_d(const SteinPresentation& x);

struct PlaneFieldInvariants {
    IntVector chern;
    Integer d;
    GammaValue gamma;
    std::optional<ExtRational> theta;
    FramedTheta theta_f0;
};

PlaneFieldInvariants plane_field_invariants(const SteinPresentation& x, const SpinStructure& s);

}  // namespace stein
