#pragma once

#include "stein/mobius.hpp"
#include "stein/presentation.hpp"
#include "stein/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace stein {

struct SeifertBase {
    bool orientable = true;
    int genus = 0;

    bool is_sphere() const { return orientable && genus == 0; }
    std::string str() const;  // "o<g>" or "n<g>"
    static SeifertBase parse(const std::string& text);
};

// Coefficients r_i of the meridians around a 0-framed central curve.
struct SeifertData {
    SeifertBase base;
    std::vector<ExtRational> coefficients;
};

// Classical Seifert invariants (p_i, q_i) become r_i = p_i / q_i.  Only
// orientable bases are supported.
SeifertData seifert_from_invariants(const SeifertBase& base, const std::vector<std::pair<Integer, Integer>>& pq);

struct SeifertNormalForm {
    ExtRational e;
    Integer e0;
    std::vector<ExtRational> rprime;  // each in [-inf, -1); infinity stands for -inf
    int k0 = 0;                       // coefficients with 1/r_i not an integer
};

SeifertNormalForm seifert_normalize(const SeifertData& s);

// The same manifold with reversed orientation (all coefficients negated).
SeifertData reverse_orientation(const SeifertData& s);

// Central 0-framed unknot with one meridian per coefficient.  Sphere base only.
SurgeryPresentation seifert_presentation(const SeifertData& s);

struct NValue {
    bool infinite = false;
    Integer value;

    bool exceeds(const ExtRational& rprime) const;  // rprime < this
    std::string str() const;
};

// n_A(r1', r2') when A satisfies As in (-1,0] and A r2' in [-inf,-1).
std::optional<NValue> n_for_map(const MobiusMap& A, const ExtRational& r1p, const ExtRational& r2p);

struct NFunctionResult {
    enum class Kind { sentinel, lower_bound, none };
    Kind kind = Kind::none;
    NValue bound;
    std::optional<MobiusMap> witness;
};

// Largest n_A over all A with entries bounded by search_bound in absolute
// value; ties go to the lexicographically smallest (a, b, c, d).
NFunctionResult n_function(const ExtRational& r1p, const ExtRational& r2p, long long search_bound);

// -[[1/(1/r1' + 1)]] - 1: every r_i' below it (i >= 2) suffices.
Integer closed_form_ell(const ExtRational& r1p);

struct SeifertDecision {
    enum class Reason { none, base, e0, fibers };
    enum class Path { none, few_fibers, all_below_minus_two, closed_form, sentinel, search };
    Reason reason = Reason::none;
    Path path = Path::none;
    std::size_t first = 0, second = 0;  // indices playing r1', r2' for closed_form/sentinel/search
    std::optional<MobiusMap> witness;
    std::optional<NValue> bound;

    bool yes() const { return reason != Reason::none; }
    std::string str() const;  // "YES(a)", "YES(b)", "YES(c)" or "UNKNOWN"
};

SeifertDecision decide_seifert(const SeifertData& s, long long search_bound = 100);

// Sigma(p1,p2,p3) with coefficients p_i/q_i solving c = +-1, q1 in (-p1,0) and
// q2 in (-p2,0).  Throws std::invalid_argument unless pairwise coprime and >= 2.
SeifertData brieskorn(const Integer& p1, const Integer& p2, const Integer& p3, int c);

// c = sum q_i prod_{j != i} p_j for sphere data with three coefficients p_i/q_i, p_i > 0.
Integer brieskorn_c(const SeifertData& s);

// Whether some p_k is congruent to +-1 modulo the product of the other two.
bool in_basic_brieskorn_family(const std::array<Integer, 3>& p);

struct BrieskornFamilyMember {
    int family = 0;
    long long ell = 0, m = 0;
    int sign = 1;
    std::array<Integer, 3> p;
    SeifertData data;
    enum class Reason { closed_form, matrix, all_below_minus_two } reason = Reason::closed_form;
    std::optional<MobiusMap> matrix;
};

constexpr int kBrieskornFamilies = 8;

// Listed realizations with e0 = -1.  nullopt when a multiplicity drops below
// 2, the multiplicities are not pairwise coprime or a denominator vanishes.
std::optional<BrieskornFamilyMember> brieskorn_family(int family, long long ell, long long m, int sign);

struct BorromeanCoeffs {
    std::array<ExtRational, 3> r;
};

struct BorromeanMembership {
    bool a0 = false, a2 = false, a3 = false;
    bool any() const { return a0 || a2 || a3; }
};

// Requires finite coefficients.
BorromeanMembership borromean_membership(const BorromeanCoeffs& c);

struct BorromeanDecision {
    bool yes = false;
    bool lens_sum = false;  // some coefficient infinite
    BorromeanMembership membership;
    std::string str() const;
};

BorromeanDecision decide_borromean(const BorromeanCoeffs& c);

SurgeryPresentation borromean_presentation(const BorromeanCoeffs& c);

// r-surgery on the double twist knot K(l, m) is M(-1/l, -1/m, r).
BorromeanCoeffs twist_knot_coefficients(const Integer& l, const Integer& m, const ExtRational& r);
// (r1, r2)-surgery on the symmetric link L(m) is M(-1/m, r1, r2).
BorromeanCoeffs two_component_coefficients(const Integer& m, const ExtRational& r1, const ExtRational& r2);

}  // namespace stein
