#pragma once

#include "stein/front.hpp"
#include "support/gen.hpp"

#include <optional>

namespace testgen {

using stein::Event;
using stein::FrontDiagram;

struct FrontShape {
    int max_events = 12;
    int max_handles = 2;
    int max_slots = 3;
};

// Random walk on strand counts that returns to the edge count, with random
// orientations.  Retries internally when a walk gets stuck.
inline FrontDiagram random_front(Gen& g, const FrontShape& shape = {}) {
    for (;;) {
        FrontDiagram d;
        int handles = static_cast<int>(g.range(0, shape.max_handles));
        for (int h = 0; h < handles; ++h) d.slots.push_back(static_cast<int>(g.range(0, shape.max_slots)));
        const int edge = d.edge_count();
        const int n = static_cast<int>(g.range(0, shape.max_events));
        int c = edge;
        bool stuck = false;
        for (int step = 0; step < n && !stuck; ++step) {
            const int remaining = n - step - 1;
            std::vector<Event> options;
            auto feasible = [&](int next) { return next >= 0 && std::abs(next - edge) <= 2 * remaining; };
            if (feasible(c + 2))
                for (int i = 1; i <= c + 1; ++i) options.push_back(Event::left(i));
            if (c >= 2 && feasible(c - 2))
                for (int i = 1; i + 1 <= c; ++i) options.push_back(Event::right(i));
            if (c >= 2 && feasible(c))
                for (int i = 1; i + 1 <= c; ++i) options.push_back(Event::cross(i));
            if (options.empty()) {
                stuck = true;
                break;
            }
            Event e = options[static_cast<std::size_t>(g.range(0, static_cast<long long>(options.size()) - 1))];
            d.events.push_back(e);
            c += e.kind == stein::EventKind::left_cusp ? 2 : (e.kind == stein::EventKind::right_cusp ? -2 : 0);
        }
        if (stuck || c != edge) continue;
        stein::FrontTrace t(d);
        for (int k = 1; k <= t.components(); ++k) d.orientation[k] = g.coin() ? 1 : -1;
        return d;
    }
}

// One handle with 2p slots and a single rightward component running through
// it 2p times, stabilized down to tb = 1 and r = 0, framed 0.
inline FrontDiagram handle_cycle_front(int p) {
    FrontDiagram d;
    d.slots = {2 * p};
    for (int i = 1; i < 2 * p; ++i) d.events.push_back(Event::cross(i));
    d.orientation[1] = 1;
    for (int k = 0; k < 2 * p - 2; ++k) {
        auto dir = k % 2 ? stein::StabilizationDirection::down : stein::StabilizationDirection::up;
        d = stein::stabilize(d, 1, {0, 1}, dir);
    }
    d.coefficients[1] = stein::Coefficient::of(0);
    return d;
}

inline stein::MoveSpec random_move(Gen& g, const FrontDiagram& d) {
    using V = stein::MoveVariant;
    stein::MoveSpec m;
    const int n = static_cast<int>(d.events.size());
    m.move = static_cast<int>(g.range(0, 6));
    m.at = static_cast<int>(g.range(0, std::max(0, n)));
    m.handle = d.n_handles() ? static_cast<int>(g.range(0, static_cast<long long>(d.n_handles()) - 1)) : 0;
    switch (m.move) {
        case 0: m.variant = V::commute; break;
        case 1: {
            static const V vs[] = {V::fishtail_below, V::fishtail_above, V::fishtail_remove};
            m.variant = vs[g.range(0, 2)];
            if (m.variant != V::fishtail_remove) {
                stein::FrontTrace t(d);
                int c = t.count(m.at);
                m.height = c ? static_cast<int>(g.range(1, c)) : 1;
            }
            break;
        }
        case 2: {
            static const V vs[] = {V::cusp_strand_above, V::cusp_strand_below, V::cusp_strand_collapse};
            m.variant = vs[g.range(0, 2)];
            break;
        }
        case 3: m.variant = V::triple; break;
        case 4:
        case 5: m.variant = g.coin() ? V::last_to_first : V::first_to_last; break;
        default: {
            static const V vs[] = {V::swing_down, V::swing_up, V::unswing};
            m.variant = vs[g.range(0, 2)];
            break;
        }
    }
    return m;
}

// A uniformly chosen move type, then a uniformly chosen applicable placement
// of it; nullopt when that type has no applicable placement.
inline std::optional<stein::MoveSpec> random_applicable_move(Gen& g, const FrontDiagram& d) {
    stein::MoveSpec base = random_move(g, d);
    std::vector<stein::MoveSpec> ok;
    const int n = static_cast<int>(d.events.size());
    stein::FrontTrace t(d);
    const int handles = static_cast<int>(d.n_handles());
    for (int at = 0; at <= n; ++at) {
        const bool uses_height = base.move == 1 && base.variant != stein::MoveVariant::fishtail_remove;
        const int heights = uses_height ? t.count(at) : 1;
        for (int h = 1; h <= heights; ++h)
            for (int handle = 0; handle < std::max(1, handles); ++handle) {
                stein::MoveSpec m = base;
                m.at = at;
                m.height = h;
                m.handle = handle;
                try {
                    (void)stein::apply_move(d, m);
                    ok.push_back(m);
                } catch (const std::invalid_argument&) {
                }
                if (base.move < 4) break;
            }
        if (base.move >= 4) break;
    }
    if (ok.empty()) return std::nullopt;
    return ok[static_cast<std::size_t>(g.range(0, static_cast<long long>(ok.size()) - 1))];
}

}  // namespace testgen
