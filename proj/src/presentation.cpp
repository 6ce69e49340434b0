#include "stein/presentation.hpp"

#include "stein/errors.hpp"

#include <algorithm>
#include <sstream>

namespace stein {

std::size_t SurgeryPresentation::n_handles_surgered() const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const SurgeryComponent& c) { return c.in_L0; }));
}

Integer SurgeryPresentation::linking(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw std::out_of_range("component index out of range");
    if (i == j) throw std::invalid_argument("self-linking is the coefficient, not a linking number");
    auto it = lk_.find({std::min(i, j), std::max(i, j)});
    return it == lk_.end() ? Integer(0) : it->second;
}

void SurgeryPresentation::set_linking(std::size_t i, std::size_t j, const Integer& v) {
    if (i >= size() || j >= size()) throw std::out_of_range("component index out of range");
    if (i == j) throw std::invalid_argument("self-linking is the coefficient, not a linking number");
    auto key = std::make_pair(std::min(i, j), std::max(i, j));
    if (v == 0) lk_.erase(key);
    else lk_[key] = v;
}

std::size_t SurgeryPresentation::add_component(const SurgeryComponent& c, const IntVector& links) {
    if (links.size() > size()) throw std::invalid_argument("more linking numbers than components");
    components.push_back(c);
    const std::size_t k = size() - 1;
    for (std::size_t j = 0; j < links.size(); ++j) set_linking(j, k, links[j]);
    return k;
}

void SurgeryPresentation::remove_component(std::size_t i) {
    if (i >= size()) throw std::out_of_range("component index out of range");
    std::map<std::pair<std::size_t, std::size_t>, Integer> moved;
    for (const auto& [key, v] : lk_) {
        if (key.first == i || key.second == i) continue;
        auto shift = [i](std::size_t x) { return x > i ? x - 1 : x; };
        moved[{shift(key.first), shift(key.second)}] = v;
    }
    lk_ = std::move(moved);
    components.erase(components.begin() + static_cast<std::ptrdiff_t>(i));
}

bool SurgeryPresentation::all_integer() const {
    return std::all_of(components.begin(), components.end(),
                       [](const SurgeryComponent& c) { return c.coefficient.is_integer(); });
}

IntMatrix SurgeryPresentation::linking_matrix() const {
    if (!all_integer()) throw std::invalid_argument("linking matrix needs integer coefficients");
    IntMatrix q(size(), size());
    for (std::size_t i = 0; i < size(); ++i) q(i, i) = components[i].coefficient.num();
    for (const auto& [key, v] : lk_) q(key.first, key.second) = q(key.second, key.first) = v;
    return q;
}

std::vector<std::string> SurgeryPresentation::violations() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto& c = components[i];
        const std::string who = "component " + std::to_string(i + 1) + ": ";
        if (c.in_L0 && !(c.coefficient == ExtRational(0))) out.push_back(who + "L0 component must have coefficient 0");
        if (c.in_L0 && !c.is_unknot) out.push_back(who + "L0 component must be an unknot");
    }
    return out;
}

Integer AbelianGroup::order() const {
    if (free_rank) return 0;
    Integer n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

std::string AbelianGroup::str() const {
    std::vector<std::string> parts;
    for (const auto& d : torsion) parts.push_back("Z/" + d.str());
    for (std::size_t k = 0; k < free_rank; ++k) parts.push_back("Z");
    if (parts.empty()) return "0";
    std::string s;
    for (const auto& part : parts) s += (s.empty() ? "" : " + ") + part;
    return s;
}

AbelianGroup h1(const SurgeryPresentation& p) {
    SurgeryPresentation q = p.all_integer() ? p : expand_rational(p);
    SmithForm s = smith_normal_form(q.linking_matrix());
    AbelianGroup g;
    for (const auto& d : s.diagonal) {
        if (d == 0) ++g.free_rank;
        else if (d > 1) g.torsion.push_back(d);
    }
    return g;
}

ExtRational linking_form(const SurgeryPresentation& p, const IntVector& x, const IntVector& y) {
    if (x.size() != p.size() || y.size() != p.size()) throw std::invalid_argument("linking_form: length mismatch");
    RatMatrix q = to_rational(p.linking_matrix());
    auto as_rational = [](const IntVector& v) {
        RatVector r;
        for (const auto& e : v) r.emplace_back(e);
        return r;
    };
    if (!solve_rational(q, as_rational(x))) throw std::invalid_argument("linking_form: first class is not torsion");
    auto u = solve_rational(q, as_rational(y));
    if (!u) throw std::invalid_argument("linking_form: second class is not torsion");
    ExtRational v = 0;
    for (std::size_t k = 0; k < x.size(); ++k) v -= ExtRational(x[k]) * (*u)[k];
    return v.frac();
}

SurgeryPresentation expand_rational(const SurgeryPresentation& p) {
    SurgeryPresentation out;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.components[i].coefficient.is_finite()) kept.push_back(i);
    for (std::size_t a = 0; a < kept.size(); ++a) {
        IntVector links;
        for (std::size_t b = 0; b < a; ++b) links.push_back(p.linking(kept[b], kept[a]));
        out.add_component(p.components[kept[a]], links);
    }
    for (std::size_t a = 0; a < kept.size(); ++a) {
        const ExtRational r = p.components[kept[a]].coefficient;
        if (r.is_integer()) continue;
        ContinuedFraction cf = neg_continued_fraction(r);
        out.components[a].coefficient = ExtRational(cf.terms[0]);
        std::size_t prev = a;
        for (std::size_t j = 1; j < cf.terms.size(); ++j) {
            SurgeryComponent u;
            u.coefficient = ExtRational(cf.terms[j]);
            u.is_unknot = true;
            IntVector links(out.size(), 0);
            links[prev] = 1;
            prev = out.add_component(u, links);
        }
    }
    return out;
}

namespace {

void require_index(const SurgeryPresentation& p, std::size_t i) {
    if (i >= p.size()) throw std::out_of_range("component " + std::to_string(i + 1) + " does not exist");
}

void forget_geometry(SurgeryComponent& c) {
    c.is_unknot = false;
    c.in_L0 = false;
    c.rot.reset();
    c.tb.reset();
}

ExtRational add_if_finite(const ExtRational& r, const ExtRational& delta) { return r.is_infinite() ? r : r + delta; }

}  // namespace

SurgeryPresentation rolfsen_twist(const SurgeryPresentation& p, std::size_t i, const Integer& m) {
    require_index(p, i);
    if (!p.components[i].is_unknot) throw std::invalid_argument("rolfsen_twist: component is not asserted unknotted");
    if (m == 0) return p;
    SurgeryPresentation out = p;
    auto& ci = out.components[i];
    ExtRational inv = ci.coefficient.reciprocal();
    ci.coefficient = inv.is_infinite() ? inv.reciprocal() : (inv + ExtRational(m)).reciprocal();
    ci.rot.reset();
    ci.tb.reset();
    ci.in_L0 = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == i) continue;
        Integer lij = p.linking(i, j);
        out.components[j].coefficient = add_if_finite(p.components[j].coefficient, ExtRational(m * lij * lij));
        forget_geometry(out.components[j]);
        for (std::size_t k = j + 1; k < p.size(); ++k) {
            if (k == i) continue;
            out.set_linking(j, k, p.linking(j, k) + m * lij * p.linking(i, k));
        }
    }
    return out;
}

SurgeryPresentation slam_dunk(const SurgeryPresentation& p, std::size_t i, std::size_t j) {
    require_index(p, i);
    require_index(p, j);
    if (i == j) throw std::invalid_argument("slam_dunk: components must differ");
    if (!p.components[i].coefficient.is_integer())
        throw std::invalid_argument("slam_dunk: the dunked-into component needs an integer coefficient");
    if (!p.components[j].is_unknot) throw std::invalid_argument("slam_dunk: meridian is not asserted unknotted");
    Integer l = p.linking(i, j);
    if (l != 1 && l != -1) throw std::invalid_argument("slam_dunk: meridian must link the component once");
    for (std::size_t k = 0; k < p.size(); ++k)
        if (k != i && k != j && p.linking(j, k) != 0)
            throw std::invalid_argument("slam_dunk: meridian links another component");
    SurgeryPresentation out = p;
    const ExtRational rj = p.components[j].coefficient;
    const ExtRational ri = p.components[i].coefficient;
    if (rj.is_zero()) out.components[i].coefficient = ExtRational::infinity();
    else out.components[i].coefficient = ri - rj.reciprocal();
    out.components[i].in_L0 = false;
    out.remove_component(j);
    return out;
}

SurgeryPresentation slam_dunk_inverse(const SurgeryPresentation& p, std::size_t i, const Integer& n) {
    require_index(p, i);
    SurgeryPresentation out = p;
    const ExtRational ri = p.components[i].coefficient;
    SurgeryComponent meridian;
    meridian.is_unknot = true;
    meridian.coefficient = ri.is_infinite() ? ExtRational(0) : (ExtRational(n) - ri).reciprocal();
    out.components[i].coefficient = ExtRational(n);
    out.components[i].in_L0 = false;
    IntVector links(p.size(), 0);
    links[i] = 1;
    out.add_component(meridian, links);
    return out;
}

SurgeryPresentation blow_down(const SurgeryPresentation& p, std::size_t i) {
    require_index(p, i);
    const auto& ci = p.components[i];
    if (!ci.is_unknot) throw std::invalid_argument("blow_down: component is not asserted unknotted");
    if (!(ci.coefficient == ExtRational(1)) && !(ci.coefficient == ExtRational(-1)))
        throw std::invalid_argument("blow_down: coefficient must be +1 or -1");
    const Integer eps = ci.coefficient.num();
    SurgeryPresentation out = p;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == i) continue;
        Integer lij = p.linking(i, j);
        out.components[j].coefficient = add_if_finite(p.components[j].coefficient, ExtRational(-eps * lij * lij));
        forget_geometry(out.components[j]);
        for (std::size_t k = j + 1; k < p.size(); ++k) {
            if (k == i) continue;
            out.set_linking(j, k, p.linking(j, k) - eps * lij * p.linking(i, k));
        }
    }
    out.remove_component(i);
    return out;
}

SteinPlanResult stein_plan(const SurgeryPresentation& p, const std::map<std::size_t, Integer>& tb_of) {
    SteinPlanResult result;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const ExtRational& r = p.components[i].coefficient;
        if (r.is_infinite()) continue;
        auto it = tb_of.find(i);
        if (it == tb_of.end())
            throw std::invalid_argument("stein_plan: no tb for component " + std::to_string(i + 1));
        if (!(r < ExtRational(it->second))) result.rejected.push_back(i);
    }
    if (!result.rejected.empty()) return result;

    SteinPlan plan;
    plan.expanded = expand_rational(p);
    // expand_rational keeps the finite components first, in order, then appends chains.
    std::size_t kept = 0;
    std::size_t next_chain = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.components[i].coefficient.is_finite()) ++next_chain;
    for (std::size_t i = 0; i < p.size(); ++i) {
        ComponentPlan cp;
        cp.component = i;
        const auto& c = p.components[i];
        if (c.coefficient.is_infinite()) {
            cp.deleted = true;
            plan.components.push_back(cp);
            continue;
        }
        cp.terms = neg_continued_fraction(c.coefficient).terms;
        const Integer tb = tb_of.at(i);
        const Integer rot = c.rot.value_or(0);
        ChainElement head;
        head.framing = cp.terms[0];
        head.zigzags = tb - 1 - cp.terms[0];
        head.tb = tb - head.zigzags;
        head.rot = rot - head.zigzags;
        cp.chain.push_back(head);
        auto& e0 = plan.expanded.components[kept];
        e0.tb = head.tb;
        e0.rot = head.rot;
        for (std::size_t j = 1; j < cp.terms.size(); ++j) {
            ChainElement u;
            u.framing = cp.terms[j];
            u.zigzags = -cp.terms[j] - 2;
            u.tb = cp.terms[j] + 1;
            u.rot = -u.zigzags;
            cp.chain.push_back(u);
            auto& ej = plan.expanded.components[next_chain++];
            ej.tb = u.tb;
            ej.rot = u.rot;
        }
        ++kept;
        plan.components.push_back(cp);
    }
    result.plan = std::move(plan);
    return result;
}

}  // namespace stein
