#include "stein/front.hpp"

#include "stein/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace stein {

std::string Event::str() const { return std::string(1, static_cast<char>(kind)) + std::to_string(height); }

std::vector<Event> parse_events(std::string_view tokens) {
    std::vector<Event> out;
    std::istringstream in{std::string(tokens)};
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'L' && tok[0] != 'R' && tok[0] != 'X'))
            throw std::invalid_argument("bad event token '" + tok + "'");
        int h = 0;
        for (std::size_t k = 1; k < tok.size(); ++k) {
            if (tok[k] < '0' || tok[k] > '9' || h > 100000000)
                throw std::invalid_argument("bad event token '" + tok + "'");
            h = h * 10 + (tok[k] - '0');
        }
        out.push_back({static_cast<EventKind>(tok[0]), h});
    }
    return out;
}

std::string events_str(const std::vector<Event>& events) {
    std::string s;
    for (const auto& e : events) {
        if (!s.empty()) s += ' ';
        s += e.str();
    }
    return s;
}

std::string Coefficient::str() const {
    switch (kind) {
        case Kind::none: return "none";
        case Kind::stein: return "stein";
        case Kind::value: return value.str();
    }
    return "none";
}

int FrontDiagram::edge_count() const {
    int s = 0;
    for (int k : slots) s += k;
    return s;
}

int FrontDiagram::first_position(std::size_t handle) const {
    int p = 1;
    for (std::size_t h = 0; h < handle; ++h) p += slots[h];
    return p;
}

namespace {

// Strand counts per gap, or a description of the first structural defect.
std::vector<int> strand_counts(const FrontDiagram& d, std::vector<std::string>* problems) {
    std::vector<int> counts;
    int c = d.edge_count();
    counts.push_back(c);
    for (std::size_t j = 0; j < d.events.size(); ++j) {
        const Event& e = d.events[j];
        bool ok = e.height >= 1;
        if (e.kind == EventKind::left_cusp) ok = ok && e.height <= c + 1;
        else ok = ok && e.height + 1 <= c;
        if (!ok) {
            if (problems)
                problems->push_back("column " + std::to_string(j) + " (" + e.str() + "): height out of range for " +
                                    std::to_string(c) + " strands");
            return {};
        }
        c += e.kind == EventKind::left_cusp ? 2 : (e.kind == EventKind::right_cusp ? -2 : 0);
        counts.push_back(c);
    }
    if (c != d.edge_count()) {
        if (problems)
            problems->push_back("slot pairing: right edge has " + std::to_string(c) + " strands but the handles hold " +
                                std::to_string(d.edge_count()));
        return {};
    }
    return counts;
}

}  // namespace

FrontTrace::FrontTrace(const FrontDiagram& d) {
    for (int k : d.slots)
        if (k < 0) throw InvariantError("negative slot count");
    std::vector<std::string> problems;
    counts_ = strand_counts(d, &problems);
    if (counts_.empty()) throw InvariantError(problems.front());

    std::size_t total = 0;
    for (int c : counts_) {
        offsets_.push_back(total);
        total += static_cast<std::size_t>(c);
    }
    // End 2*piece is the left end, 2*piece+1 the right end.
    std::vector<std::size_t> partner(2 * total);
    auto link = [&](std::size_t a, std::size_t b) {
        partner[a] = b;
        partner[b] = a;
    };
    auto left_end = [&](int g, int h) { return 2 * index({g, h}); };
    auto right_end = [&](int g, int h) { return 2 * index({g, h}) + 1; };

    for (std::size_t j = 0; j < d.events.size(); ++j) {
        const Event& e = d.events[j];
        const int g = static_cast<int>(j);
        const int i = e.height;
        const int before = counts_[j];
        switch (e.kind) {
            case EventKind::crossing:
                for (int h = 1; h <= before; ++h) {
                    int to = h == i ? i + 1 : (h == i + 1 ? i : h);
                    link(right_end(g, h), left_end(g + 1, to));
                }
                break;
            case EventKind::left_cusp:
                link(left_end(g + 1, i), left_end(g + 1, i + 1));
                for (int h = 1; h <= before; ++h) link(right_end(g, h), left_end(g + 1, h < i ? h : h + 2));
                break;
            case EventKind::right_cusp:
                link(right_end(g, i), right_end(g, i + 1));
                for (int h = 1; h <= before; ++h) {
                    if (h == i || h == i + 1) continue;
                    link(right_end(g, h), left_end(g + 1, h < i ? h : h - 2));
                }
                break;
        }
    }
    const int last = static_cast<int>(counts_.size()) - 1;
    for (int p = 1; p <= counts_.front(); ++p) link(right_end(last, p), left_end(0, p));

    component_.assign(total, 0);
    raw_direction_.assign(total, 0);
    for (int g = 0; g <= last; ++g)
        for (int h = 1; h <= counts_[static_cast<std::size_t>(g)]; ++h) {
            std::size_t start = index({g, h});
            if (component_[start] != 0) continue;
            const int id = ++n_components_;
            first_.push_back({g, h});
            std::size_t cur = start;
            int dir = 1;
            for (;;) {
                component_[cur] = id;
                raw_direction_[cur] = dir;
                std::size_t out = 2 * cur + (dir == 1 ? 1 : 0);
                std::size_t in = partner[out];
                cur = in / 2;
                dir = (in % 2 == 0) ? 1 : -1;
                if (cur == start) break;
            }
        }
    sign_.assign(static_cast<std::size_t>(n_components_) + 1, 1);
    for (const auto& [c, s] : d.orientation)
        if (c >= 1 && c <= n_components_ && s < 0) sign_[static_cast<std::size_t>(c)] = -1;
}

std::size_t FrontTrace::index(Piece p) const {
    return offsets_[static_cast<std::size_t>(p.gap)] + static_cast<std::size_t>(p.height - 1);
}

int FrontTrace::component(Piece p) const {
    if (p.gap < 0 || p.gap >= gaps() || p.height < 1 || p.height > count(p.gap))
        throw std::out_of_range("piece outside the diagram");
    return component_[index(p)];
}

int FrontTrace::direction(Piece p) const {
    int c = component(p);
    return raw_direction_[index(p)] * sign_[static_cast<std::size_t>(c)];
}

Piece FrontTrace::first_piece(int c) const {
    if (c < 1 || c > n_components_) throw std::out_of_range("unknown component " + std::to_string(c));
    return first_[static_cast<std::size_t>(c - 1)];
}

ValidationReport validate(const FrontDiagram& d) {
    ValidationReport report;
    for (std::size_t h = 0; h < d.slots.size(); ++h)
        if (d.slots[h] < 0) report.violations.push_back("handle " + std::to_string(h + 1) + ": negative slot count");
    if (!report.ok()) return report;
    if (strand_counts(d, &report.violations).empty()) return report;

    FrontTrace t(d);
    for (int c = 1; c <= t.components(); ++c)
        if (!d.orientation.count(c)) report.violations.push_back("component " + std::to_string(c) + ": orientation missing");
    for (const auto& [c, s] : d.orientation) {
        if (c < 1 || c > t.components())
            report.violations.push_back("orientation given for unknown component " + std::to_string(c));
        else if (s != 1 && s != -1)
            report.violations.push_back("component " + std::to_string(c) + ": orientation must be + or -");
    }
    for (const auto& [c, k] : d.coefficients)
        if (c < 1 || c > t.components())
            report.violations.push_back("coefficient given for unknown component " + std::to_string(c));
    return report;
}

int ComponentStats::total_passages() const {
    int s = 0;
    for (int x : handle_passages) s += x;
    return s;
}

std::vector<ComponentStats> all_component_stats(const FrontDiagram& d) {
    FrontTrace t(d);
    std::vector<ComponentStats> stats(static_cast<std::size_t>(t.components()));
    for (int c = 1; c <= t.components(); ++c) {
        auto& s = stats[static_cast<std::size_t>(c - 1)];
        s.component = c;
        s.handle_runs.assign(d.n_handles(), 0);
        s.handle_passages.assign(d.n_handles(), 0);
    }
    auto at = [&](int c) -> ComponentStats& { return stats[static_cast<std::size_t>(c - 1)]; };

    for (std::size_t j = 0; j < d.events.size(); ++j) {
        const Event& e = d.events[j];
        const int g = static_cast<int>(j);
        const int i = e.height;
        switch (e.kind) {
            case EventKind::crossing: {
                int a = t.component({g, i}), b = t.component({g, i + 1});
                if (a != b) break;
                at(a).w += t.direction({g, i}) == t.direction({g, i + 1}) ? 1 : -1;
                break;
            }
            case EventKind::left_cusp: {
                auto& s = at(t.component({g + 1, i}));
                ++s.lambda;
                if (t.direction({g + 1, i}) == 1) ++s.lambda_plus;
                else ++s.lambda_minus;
                break;
            }
            case EventKind::right_cusp: {
                auto& s = at(t.component({g, i}));
                ++s.rho;
                if (t.direction({g, i + 1}) == 1) ++s.rho_plus;
                else ++s.rho_minus;
                break;
            }
        }
    }
    for (std::size_t h = 0; h < d.n_handles(); ++h) {
        int p0 = d.first_position(h);
        for (int p = p0; p < p0 + d.slots[h]; ++p) {
            auto& s = at(t.component({0, p}));
            s.handle_runs[h] += t.direction({0, p});
            ++s.handle_passages[h];
        }
    }
    for (auto& s : stats) {
        s.t_plus = s.lambda_plus + s.rho_plus;
        s.t_minus = s.lambda_minus + s.rho_minus;
        s.tb = s.w - s.lambda;
        s.r = s.lambda_minus - s.rho_plus;
    }
    return stats;
}

ComponentStats component_stats(const FrontDiagram& d, int component) {
    auto all = all_component_stats(d);
    if (component < 1 || component > static_cast<int>(all.size()))
        throw std::out_of_range("unknown component " + std::to_string(component));
    return all[static_cast<std::size_t>(component - 1)];
}

int linking_number(const FrontDiagram& d, int c1, int c2) {
    if (c1 == c2) throw std::invalid_argument("linking_number needs two distinct components");
    FrontTrace t(d);
    if (c1 < 1 || c1 > t.components() || c2 < 1 || c2 > t.components())
        throw std::out_of_range("unknown component");
    int total = 0;
    for (std::size_t j = 0; j < d.events.size(); ++j) {
        const Event& e = d.events[j];
        if (e.kind != EventKind::crossing) continue;
        const int g = static_cast<int>(j);
        int a = t.component({g, e.height}), b = t.component({g, e.height + 1});
        if (!((a == c1 && b == c2) || (a == c2 && b == c1))) continue;
        total += t.direction({g, e.height}) == t.direction({g, e.height + 1}) ? 1 : -1;
    }
    return total / 2;
}

FrontDiagram stabilize(const FrontDiagram& d, int component, Piece location, StabilizationDirection dir) {
    FrontTrace t(d);
    if (location.gap < 0 || location.gap >= t.gaps() || location.height < 1 ||
        location.height > t.count(location.gap))
        throw std::invalid_argument("stabilize: location outside the diagram");
    if (t.component(location) != component)
        throw std::invalid_argument("stabilize: location is not on component " + std::to_string(component));
    const int i = location.height;
    const bool rightward = t.direction(location) == 1;
    const bool upper_first = (dir == StabilizationDirection::up) == rightward;
    std::vector<Event> block = upper_first ? std::vector<Event>{Event::left(i), Event::right(i + 1)}
                                           : std::vector<Event>{Event::left(i + 1), Event::right(i)};
    FrontDiagram out = d;
    out.events.insert(out.events.begin() + location.gap, block.begin(), block.end());
    // Pieces left of the insertion keep their gap and height, so component ids
    // and orientations are unchanged.
    return out;
}

SteinFormReport check_stein_form(const FrontDiagram& d) {
    SteinFormReport report;
    auto v = validate(d);
    if (!v.ok()) {
        report.failures = v.violations;
        return report;
    }
    for (const auto& s : all_component_stats(d)) {
        const std::string who = "component " + std::to_string(s.component) + ": ";
        auto it = d.coefficients.find(s.component);
        Coefficient k = it == d.coefficients.end() ? Coefficient::none() : it->second;
        if (k.kind == Coefficient::Kind::none) {
            report.failures.push_back(who + "missing coefficient");
        } else if (k.kind == Coefficient::Kind::value && !(k.value == ExtRational(s.tb - 1))) {
            report.failures.push_back(who + "framing != tb-1 (coefficient " + k.value.str() + ", tb " +
                                      std::to_string(s.tb) + ")");
        }
        if (((s.tb + s.r + 1 - s.total_passages()) % 2) != 0)
            report.failures.push_back(who + "convention corruption (tb + r + 1 and handle passages differ mod 2)");
    }
    return report;
}

SurgeryPresentation surger_handles(const FrontDiagram& d) {
    auto v = validate(d);
    if (!v.ok()) throw InvariantError(v.violations.front());
    auto stats = all_component_stats(d);
    SurgeryPresentation p;
    for (const auto& s : stats) {
        auto it = d.coefficients.find(s.component);
        if (it == d.coefficients.end() || it->second.kind == Coefficient::Kind::none)
            throw std::invalid_argument("component " + std::to_string(s.component) + ": missing coefficient");
        SurgeryComponent c;
        c.coefficient = it->second.kind == Coefficient::Kind::stein ? ExtRational(s.tb - 1) : it->second.value;
        c.rot = s.r;
        c.tb = s.tb;
        IntVector links;
        for (std::size_t k = 0; k < p.size(); ++k) links.push_back(linking_number(d, static_cast<int>(k + 1), s.component));
        p.add_component(c, links);
    }
    for (std::size_t h = 0; h < d.n_handles(); ++h) {
        SurgeryComponent u;
        u.coefficient = ExtRational(0);
        u.is_unknot = true;
        u.in_L0 = true;
        IntVector links;
        for (const auto& s : stats) links.push_back(s.handle_runs[h]);
        links.resize(p.size(), 0);
        p.add_component(u, links);
    }
    return p;
}

}  // namespace stein
