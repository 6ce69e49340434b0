#pragma once

#include "stein/continued_fraction.hpp"
#include "stein/matrix.hpp"
#include "stein/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stein {

struct SurgeryComponent {
    ExtRational coefficient;
    bool is_unknot = false;  // asserted, never computed
    bool in_L0 = false;      // 0-framed unknot standing in for a surgered 1-handle
    std::optional<Integer> rot;
    std::optional<Integer> tb;

    friend bool operator==(const SurgeryComponent&, const SurgeryComponent&) = default;
};

// Components are indexed from 0 here and from 1 in files and on the command line.
class SurgeryPresentation {
public:
    std::vector<SurgeryComponent> components;

    std::size_t size() const { return components.size(); }
    std::size_t n_handles_surgered() const;

    Integer linking(std::size_t i, std::size_t j) const;
    void set_linking(std::size_t i, std::size_t j, const Integer& v);

    // Appends a component; `links[k]` is its linking number with component k.
    std::size_t add_component(const SurgeryComponent& c, const IntVector& links = {});
    void remove_component(std::size_t i);

    bool all_integer() const;
    // Coefficients on the diagonal, linking numbers off it.  Requires all_integer().
    IntMatrix linking_matrix() const;

    std::vector<std::string> violations() const;

    friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;

private:
    std::map<std::pair<std::size_t, std::size_t>, Integer> lk_;  // keys with first < second
};

struct AbelianGroup {
    std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next
    std::size_t free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    Integer order() const;  // 0 when infinite
    std::string str() const;
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

AbelianGroup h1(const SurgeryPresentation& p);

// -x^T Q^{-1} y mod 1 for torsion classes given in meridian coordinates of an
// integer presentation.  Returned in [0, 1).
ExtRational linking_form(const SurgeryPresentation& p, const IntVector& x, const IntVector& y);

SurgeryPresentation expand_rational(const SurgeryPresentation& p);

SurgeryPresentation rolfsen_twist(const SurgeryPresentation& p, std::size_t i, const Integer& m);

// Deletes meridian j of component i and sets r_i to r_i - 1/r_j.
SurgeryPresentation slam_dunk(const SurgeryPresentation& p, std::size_t i, std::size_t j);

// Rewrites r_i as an integer n plus a fresh meridian with coefficient 1/(n - r_i).
// The new meridian is appended last and links only component i (lk = 1).
SurgeryPresentation slam_dunk_inverse(const SurgeryPresentation& p, std::size_t i, const Integer& n);

SurgeryPresentation blow_down(const SurgeryPresentation& p, std::size_t i);

struct ChainElement {
    Integer framing;    // a_j
    Integer tb;         // a_j + 1
    Integer rot;
    Integer zigzags;    // stabilizations added, all upward
};

struct ComponentPlan {
    std::size_t component = 0;
    bool deleted = false;  // coefficient infinity
    std::vector<Integer> terms;
    std::vector<ChainElement> chain;  // chain[0] is the original knot
};

struct SteinPlan {
    SurgeryPresentation expanded;  // every component framed tb - 1
    std::vector<ComponentPlan> components;
};

struct SteinPlanResult {
    std::optional<SteinPlan> plan;
    std::vector<std::size_t> rejected;  // components with r_i >= tb(K_i)
};

// Realizes every finite coefficient r_i < tb(K_i) by a chain of Legendrian
// knots framed tb - 1.  Rotation numbers are read from the components (0 when
// absent); `tb_of` must cover every component with a finite coefficient.
SteinPlanResult stein_plan(const SurgeryPresentation& p, const std::map<std::size_t, Integer>& tb_of);

SurgeryPresentation parse_surgery(std::string_view text);
std::string serialize_surgery(const SurgeryPresentation& p);

}  // namespace stein
