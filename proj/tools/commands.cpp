#include "commands.hpp"

#include "stein/errors.hpp"
#include "stein/families.hpp"
#include "stein/front.hpp"
#include "stein/invariants.hpp"
#include "stein/presentation.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace stein::cli {

namespace {

void line(std::ostream& out, const std::string& key, const std::string& value) { out << key << ": " << value << "\n"; }

template <class T>
std::string joined(const std::vector<T>& v, const std::string& sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        if constexpr (std::is_same_v<T, std::string>) s += v[i];
        else if constexpr (std::is_arithmetic_v<T>) s += std::to_string(v[i]);
        else s += v[i].str();
    }
    return s;
}

std::string tuple(const IntVector& v) { return "(" + joined(v) + ")"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_word(const std::string& text) {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) {
        auto hash = l.find('#');
        if (hash != std::string::npos) l.erase(hash);
        std::istringstream words(l);
        std::string w;
        if (words >> w) return w;
    }
    return {};
}

FrontDiagram load_front(const std::string& path) { return parse_front(read_file(path)); }
SurgeryPresentation load_surgery(const std::string& path) { return parse_surgery(read_file(path)); }

// A FRONT file is surgered first.
SurgeryPresentation load_presentation(const std::string& path) {
    const std::string text = read_file(path);
    if (first_word(text) == "front") return surger_handles(parse_front(text));
    return parse_surgery(text);
}

std::size_t index(int one_based, std::size_t size, const std::string& what) {
    if (one_based < 1 || static_cast<std::size_t>(one_based) > size)
        throw UsageError(what + " index " + std::to_string(one_based) + " out of range 1.." + std::to_string(size));
    return static_cast<std::size_t>(one_based - 1);
}

ExtRational rational_arg(const std::string& s) {
    try {
        return ExtRational::parse(s);
    } catch (const std::exception&) {
        throw UsageError("not a rational: '" + s + "'");
    }
}

Integer integer_arg(const std::string& s) {
    ExtRational r = rational_arg(s);
    if (!r.is_integer()) throw UsageError("not an integer: '" + s + "'");
    return r.num();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string path_name(SeifertDecision::Path p) {
    switch (p) {
        case SeifertDecision::Path::few_fibers: return "at most two fibers";
        case SeifertDecision::Path::all_below_minus_two: return "all r' < -2";
        case SeifertDecision::Path::closed_form: return "closed-form l";
        case SeifertDecision::Path::sentinel: return "s = r2'";
        case SeifertDecision::Path::search: return "matrix search";
        case SeifertDecision::Path::none: break;
    }
    return "none";
}

void seifert_report(const SeifertData& s, long long bound, std::ostream& out) {
    const SeifertNormalForm n = seifert_normalize(s);
    line(out, "base", s.base.str());
    line(out, "coefficients", joined(s.coefficients));
    line(out, "e", n.e.str());
    line(out, "e0", n.e0.str());
    line(out, "k0", std::to_string(n.k0));
    line(out, "rprime", joined(n.rprime));
    const SeifertDecision d = decide_seifert(s, bound);
    line(out, "decision", d.str());
    if (d.reason == SeifertDecision::Reason::fibers) {
        line(out, "path", path_name(d.path));
        if (d.path == SeifertDecision::Path::closed_form || d.path == SeifertDecision::Path::sentinel ||
            d.path == SeifertDecision::Path::search)
            line(out, "pair", std::to_string(d.first + 1) + "," + std::to_string(d.second + 1));
        if (d.witness) line(out, "witness", d.witness->str());
        if (d.bound) line(out, "n", d.bound->str());
    }
}

MoveVariant variant_arg(const std::string& name) {
    static const std::map<std::string, MoveVariant> names{
        {"fishtail-below", MoveVariant::fishtail_below},
        {"fishtail-above", MoveVariant::fishtail_above},
        {"fishtail-remove", MoveVariant::fishtail_remove},
        {"cusp-strand-above", MoveVariant::cusp_strand_above},
        {"cusp-strand-below", MoveVariant::cusp_strand_below},
        {"cusp-strand-collapse", MoveVariant::cusp_strand_collapse},
        {"triple", MoveVariant::triple},
        {"last-to-first", MoveVariant::last_to_first},
        {"first-to-last", MoveVariant::first_to_last},
        {"swing-down", MoveVariant::swing_down},
        {"swing-up", MoveVariant::swing_up},
        {"unswing", MoveVariant::unswing},
        {"commute", MoveVariant::commute},
    };
    auto it = names.find(name);
    if (it == names.end()) throw UsageError("unknown move variant '" + name + "'");
    return it->second;
}

}  // namespace

int stats(const std::string& path, std::ostream& out) {
    const FrontDiagram d = load_front(path);
    const auto all = all_component_stats(d);
    for (const auto& s : all) {
        line(out, "component", std::to_string(s.component));
        line(out, "tb", std::to_string(s.tb));
        line(out, "r", std::to_string(s.r));
        line(out, "w", std::to_string(s.w));
        line(out, "lambda", std::to_string(s.lambda));
        line(out, "lambda_plus", std::to_string(s.lambda_plus));
        line(out, "lambda_minus", std::to_string(s.lambda_minus));
        line(out, "rho_plus", std::to_string(s.rho_plus));
        line(out, "rho_minus", std::to_string(s.rho_minus));
        line(out, "t_plus", std::to_string(s.t_plus));
        line(out, "t_minus", std::to_string(s.t_minus));
        line(out, "passages", std::to_string(s.total_passages()));
        if (!s.handle_runs.empty()) line(out, "runs", joined(s.handle_runs));
    }
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            line(out, "lk " + std::to_string(all[a].component) + " " + std::to_string(all[b].component),
                 std::to_string(linking_number(d, all[a].component, all[b].component)));
    return 0;
}

int lint(const std::string& path, std::ostream& out) {
    const FrontDiagram d = parse_front_unchecked(read_file(path));
    const ValidationReport report = validate(d);
    for (const auto& v : report.violations) line(out, "violation", v);
    bool ok = report.ok();
    if (ok)
        for (const auto& s : all_component_stats(d)) {
            const bool even = (s.tb + s.r + 1 - s.total_passages()) % 2 == 0;
            line(out, "parity " + std::to_string(s.component), even ? "ok" : "violated");
            ok = ok && even;
        }
    line(out, "lint", ok ? "ok" : "failed");
    return ok ? 0 : 2;
}

int check_stein(const std::string& path, std::ostream& out) {
    const SteinFormReport r = check_stein_form(load_front(path));
    for (const auto& f : r.failures) line(out, "failure", f);
    line(out, "stein-form", r.passed() ? "pass" : "fail");
    return 0;
}

int surger(const std::string& path, std::ostream& out) {
    out << serialize_surgery(surger_handles(load_front(path)));
    return 0;
}

int h1(const std::string& path, std::ostream& out) {
    const AbelianGroup g = stein::h1(load_presentation(path));
    line(out, "h1", g.str());
    line(out, "order", g.free_rank ? "inf" : g.order().str());
    return 0;
}

int expand(const std::string& path, std::ostream& out) {
    out << serialize_surgery(expand_rational(load_surgery(path)));
    return 0;
}

int twist(const std::string& path, int i, const std::string& m, std::ostream& out) {
    const SurgeryPresentation p = load_surgery(path);
    out << serialize_surgery(rolfsen_twist(p, index(i, p.size(), "component"), integer_arg(m)));
    return 0;
}

int dunk(const std::string& path, int i, std::optional<int> j, std::optional<std::string> inverse, std::ostream& out) {
    const SurgeryPresentation p = load_surgery(path);
    const std::size_t ii = index(i, p.size(), "component");
    if (inverse) {
        if (j) throw UsageError("dunk --inverse takes a single component");
        out << serialize_surgery(slam_dunk_inverse(p, ii, integer_arg(*inverse)));
        return 0;
    }
    if (!j) throw UsageError("dunk needs a component and its meridian");
    out << serialize_surgery(slam_dunk(p, ii, index(*j, p.size(), "meridian")));
    return 0;
}

int blowdown(const std::string& path, int i, std::ostream& out) {
    const SurgeryPresentation p = load_surgery(path);
    out << serialize_surgery(blow_down(p, index(i, p.size(), "component")));
    return 0;
}

int plan(const std::string& path, std::ostream& out) {
    const SurgeryPresentation p = load_surgery(path);
    std::map<std::size_t, Integer> tb;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.components[i].tb) tb[i] = *p.components[i].tb;
    const SteinPlanResult r = stein_plan(p, tb);
    for (std::size_t i : r.rejected) line(out, "rejected", std::to_string(i + 1));
    if (!r.plan) {
        line(out, "plan", "none");
        return 0;
    }
    line(out, "plan", "ok");
    for (const auto& c : r.plan->components) {
        line(out, "component", std::to_string(c.component + 1));
        if (c.deleted) {
            line(out, "deleted", "true");
            continue;
        }
        line(out, "terms", joined(c.terms));
        for (std::size_t k = 0; k < c.chain.size(); ++k) {
            const auto& e = c.chain[k];
            line(out, "knot " + std::to_string(k + 1),
                 "framing " + e.framing.str() + " tb " + e.tb.str() + " rot " + e.rot.str() + " zigzags " + e.zigzags.str());
        }
    }
    return 0;
}

int gamma(const std::string& path, const std::optional<std::string>& sublink, std::ostream& out) {
    const SteinPresentation x = stein_presentation(load_presentation(path));
    const std::size_t slots = x.m() + x.n1;
    line(out, "slots", std::to_string(slots));
    line(out, "chern", tuple(chern_cocycle(x)));
    std::vector<SpinStructure> spins;
    if (sublink) {
        SpinStructure s;
        s.sublink.assign(slots, false);
        std::istringstream in(*sublink);
        std::string item;
        while (std::getline(in, item, ','))
            if (!item.empty()) s.sublink[index(static_cast<int>(integer_arg(item)), slots, "slot")] = true;
        if (!is_characteristic(x, s)) throw UsageError("sublink " + s.str() + " is not characteristic");
        spins.push_back(s);
    } else {
        spins = characteristic_sublinks(x);
        line(out, "sublinks", std::to_string(spins.size()));
    }
    for (const auto& s : spins) {
        const GammaValue g = stein::gamma(x, s);
        line(out, "sublink", s.str());
        line(out, "rho", tuple(g.rho));
        line(out, "gamma", g.cls.str() + " mod im(Q*)");
    }
    return 0;
}

int theta(const std::string& path, std::ostream& out) {
    const SteinPresentation x = stein_presentation(load_presentation(path));
    const auto th = stein::theta(x);
    line(out, "theta", th ? th->str() : "undefined (c1 has infinite order)");
    const FramedTheta f = theta_f0_and_d(x);
    line(out, "d", f.d.str());
    line(out, "Theta_f0", f.str());
    line(out, "chi", std::to_string(euler_characteristic(x)));
    line(out, "sigma", std::to_string(signature(x)));
    return 0;
}

int seifert(const SeifertArgs& args, std::ostream& out) {
    SeifertData s;
    try {
        s.base = SeifertBase::parse(args.base);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    for (const auto& c : args.coefficients) s.coefficients.push_back(rational_arg(c));
    if (args.search_bound < 1) throw UsageError("--search-bound must be positive");
    seifert_report(s, args.search_bound, out);
    return 0;
}

int brieskorn(const std::vector<std::string>& p, const std::string& orientation, long long search_bound, std::ostream& out) {
    if (p.size() != 3) throw UsageError("brieskorn needs three multiplicities");
    if (orientation != "+" && orientation != "-") throw UsageError("--orientation must be + or -");
    const SeifertData s = stein::brieskorn(integer_arg(p[0]), integer_arg(p[1]), integer_arg(p[2]), orientation == "+" ? 1 : -1);
    line(out, "c", brieskorn_c(s).str());
    seifert_report(s, search_bound, out);
    return 0;
}

int borromean(const BorromeanArgs& args, std::ostream& out) {
    const int given = !args.coefficients.empty() + !args.twist_knot.empty() + !args.two_component.empty();
    if (given != 1) throw UsageError("give exactly one of: three coefficients, --twist-knot, --two-component");
    BorromeanCoeffs c;
    if (!args.coefficients.empty()) {
        if (args.coefficients.size() != 3) throw UsageError("borromean needs three coefficients");
        c = {{rational_arg(args.coefficients[0]), rational_arg(args.coefficients[1]), rational_arg(args.coefficients[2])}};
    } else if (!args.twist_knot.empty()) {
        if (args.twist_knot.size() != 3) throw UsageError("--twist-knot takes l m r");
        c = twist_knot_coefficients(integer_arg(args.twist_knot[0]), integer_arg(args.twist_knot[1]),
                                    rational_arg(args.twist_knot[2]));
    } else {
        if (args.two_component.size() != 3) throw UsageError("--two-component takes m r1 r2");
        c = two_component_coefficients(integer_arg(args.two_component[0]), rational_arg(args.two_component[1]),
                                       rational_arg(args.two_component[2]));
    }
    line(out, "coefficients", c.r[0].str() + "," + c.r[1].str() + "," + c.r[2].str());
    const BorromeanDecision d = decide_borromean(c);
    if (!d.lens_sum) {
        line(out, "inA0", yes_no(d.membership.a0));
        line(out, "inA2", yes_no(d.membership.a2));
        line(out, "inA3", yes_no(d.membership.a3));
    }
    line(out, "decision", d.yes ? (d.lens_sum ? "YES(lens-space sum)" : "YES(outside A0, A2, A3)") : "UNKNOWN");
    return 0;
}

int move(const std::string& path, const MoveArgs& args, std::ostream& out) {
    const FrontDiagram d = load_front(path);
    MoveSpec m;
    m.move = args.move;
    m.variant = variant_arg(args.variant);
    m.at = args.at;
    m.height = args.height;
    if (args.handle < 1) throw UsageError("--handle is 1-based");
    m.handle = args.handle - 1;
    out << serialize_front(apply_move(d, m));
    return 0;
}

int stabilize(const std::string& path, const StabilizeArgs& args, std::ostream& out) {
    const FrontDiagram d = load_front(path);
    StabilizationDirection dir;
    if (args.direction == "up") dir = StabilizationDirection::up;
    else if (args.direction == "down") dir = StabilizationDirection::down;
    else throw UsageError("direction must be up or down");
    const FrontTrace trace(d);
    if (args.gap < 0 || args.gap >= trace.gaps()) throw UsageError("--at gap out of range");
    int height = 0;
    if (args.height) {
        height = *args.height;
    } else {
        for (int h = 1; h <= trace.count(args.gap) && !height; ++h)
            if (trace.component({args.gap, h}) == args.component) height = h;
        if (!height) throw UsageError("component " + std::to_string(args.component) + " has no strand in gap " + std::to_string(args.gap));
    }
    out << serialize_front(stein::stabilize(d, args.component, Piece{args.gap, height}, dir));
    return 0;
}

}  // namespace stein::cli
