#include "stein/front.hpp"

#include "stein/errors.hpp"

#include <functional>
#include <optional>

namespace stein {

namespace {

using PieceMap = std::function<std::optional<Piece>(Piece)>;

[[noreturn]] void mismatch(const std::string& what) { throw std::invalid_argument("pattern mismatch: " + what); }

std::vector<Event> slice(const std::vector<Event>& ev, int from, int len) {
    return {ev.begin() + from, ev.begin() + from + len};
}

// Rebuilds orientation and coefficient tables of `next` from `old` through a
// map sending surviving pieces of `old` to the same arcs in `next`.
TrackedMove carry(const FrontDiagram& old, FrontDiagram next, const PieceMap& map) {
    FrontTrace before(old);
    next.orientation.clear();
    next.coefficients.clear();
    FrontTrace after(next);
    TrackedMove out;
    out.image.assign(static_cast<std::size_t>(before.components()) + 1, 0);
    std::vector<bool> hit(static_cast<std::size_t>(after.components()) + 1, false);
    for (int g = 0; g < before.gaps(); ++g)
        for (int h = 1; h <= before.count(g); ++h) {
            int c = before.component({g, h});
            if (out.image[static_cast<std::size_t>(c)] != 0) continue;
            auto np = map({g, h});
            if (!np) continue;
            int nc = after.component(*np);
            out.image[static_cast<std::size_t>(c)] = nc;
            hit[static_cast<std::size_t>(nc)] = true;
            next.orientation[nc] = before.direction({g, h}) * after.direction(*np);
            if (auto it = old.coefficients.find(c); it != old.coefficients.end()) next.coefficients[nc] = it->second;
        }
    for (int c = 1; c <= before.components(); ++c)
        if (out.image[static_cast<std::size_t>(c)] == 0) throw std::logic_error("move lost a component");
    for (int c = 1; c <= after.components(); ++c)
        if (!hit[static_cast<std::size_t>(c)]) throw std::logic_error("move created a component");
    out.diagram = std::move(next);
    return out;
}

// Replaces `len` events starting at `at` by `block`; pieces outside the
// rewritten window keep their heights.
TrackedMove splice(const FrontDiagram& d, int at, int len, const std::vector<Event>& block) {
    FrontDiagram next = d;
    next.events.erase(next.events.begin() + at, next.events.begin() + at + len);
    next.events.insert(next.events.begin() + at, block.begin(), block.end());
    const int shift = static_cast<int>(block.size()) - len;
    return carry(d, next, [=](Piece p) -> std::optional<Piece> {
        if (p.gap <= at) return p;
        if (p.gap >= at + len) return Piece{p.gap + shift, p.height};
        return std::nullopt;
    });
}

void require_event(const FrontDiagram& d, int at, int len) {
    if (at < 0 || at + len > static_cast<int>(d.events.size()))
        throw std::invalid_argument("column " + std::to_string(at) + " out of range");
}

TrackedMove fishtail(const FrontDiagram& d, const FrontTrace& t, const MoveSpec& m) {
    const int i = m.height;
    if (m.variant == MoveVariant::fishtail_remove) {
        require_event(d, m.at, 3);
        auto w = slice(d.events, m.at, 3);
        for (int a = 1; a <= w[1].height + 1; ++a) {
            if (w == std::vector<Event>{Event::left(a + 1), Event::cross(a), Event::right(a + 1)} ||
                w == std::vector<Event>{Event::left(a), Event::cross(a + 1), Event::right(a)})
                return splice(d, m.at, 3, {});
        }
        mismatch("no fishtail at column " + std::to_string(m.at));
    }
    if (m.at < 0 || m.at >= t.gaps()) throw std::invalid_argument("gap " + std::to_string(m.at) + " out of range");
    if (i < 1 || i > t.count(m.at)) throw std::invalid_argument("no strand at height " + std::to_string(i));
    if (m.variant == MoveVariant::fishtail_below)
        return splice(d, m.at, 0, {Event::left(i + 1), Event::cross(i), Event::right(i + 1)});
    return splice(d, m.at, 0, {Event::left(i), Event::cross(i + 1), Event::right(i)});
}

TrackedMove cusp_strand(const FrontDiagram& d, const FrontTrace& t, const MoveSpec& m) {
    const int j = m.at;
    if (m.variant == MoveVariant::cusp_strand_collapse) {
        require_event(d, j, 3);
        auto w = slice(d.events, j, 3);
        const int k = w[1].height;
        using E = Event;
        if (w == std::vector<E>{E::left(k - 1), E::cross(k), E::cross(k - 1)} ||
            w == std::vector<E>{E::left(k + 1), E::cross(k), E::cross(k + 1)})
            return splice(d, j, 3, {E::left(k)});
        if (w == std::vector<E>{E::cross(k - 1), E::cross(k), E::right(k - 1)} ||
            w == std::vector<E>{E::cross(k + 1), E::cross(k), E::right(k + 1)})
            return splice(d, j, 3, {E::right(k)});
        mismatch("no cusp passing a strand at column " + std::to_string(j));
    }
    require_event(d, j, 1);
    const Event e = d.events[static_cast<std::size_t>(j)];
    const int k = e.height;
    const int c = t.count(j);
    const bool above = m.variant == MoveVariant::cusp_strand_above;
    switch (e.kind) {
        case EventKind::left_cusp:
            if (above && k >= 2) return splice(d, j, 1, {Event::left(k - 1), Event::cross(k), Event::cross(k - 1)});
            if (!above && k <= c) return splice(d, j, 1, {Event::left(k + 1), Event::cross(k), Event::cross(k + 1)});
            break;
        case EventKind::right_cusp:
            if (above && k >= 2) return splice(d, j, 1, {Event::cross(k - 1), Event::cross(k), Event::right(k - 1)});
            if (!above && k + 2 <= c) return splice(d, j, 1, {Event::cross(k + 1), Event::cross(k), Event::right(k + 1)});
            break;
        case EventKind::crossing: break;
    }
    mismatch("column " + std::to_string(j) + " has no cusp with a strand " + (above ? "above" : "below"));
}

TrackedMove triple(const FrontDiagram& d, const MoveSpec& m) {
    require_event(d, m.at, 3);
    auto w = slice(d.events, m.at, 3);
    for (const auto& e : w)
        if (e.kind != EventKind::crossing) mismatch("column " + std::to_string(m.at) + " is not a crossing triple");
    const int a = w[0].height, b = w[1].height;
    if (w[2].height == a && (b == a + 1 || b == a - 1))
        return splice(d, m.at, 3, {Event::cross(b), Event::cross(a), Event::cross(b)});
    mismatch("column " + std::to_string(m.at) + " is not a crossing triple");
}

TrackedMove commute(const FrontDiagram& d, const MoveSpec& m) {
    require_event(d, m.at, 2);
    const Event e1 = d.events[static_cast<std::size_t>(m.at)];
    const Event e2 = d.events[static_cast<std::size_t>(m.at + 1)];
    auto width_in = [](const Event& e) { return e.kind == EventKind::left_cusp ? 0 : 2; };
    auto width_out = [](const Event& e) { return e.kind == EventKind::right_cusp ? 0 : 2; };
    const int a = e1.height, b = e2.height;
    Event f2 = e2, f1 = e1;
    if (b + width_in(e2) <= a) {
        f1.height = a - width_in(e2) + width_out(e2);
    } else if (b >= a + width_out(e1)) {
        f2.height = b - width_out(e1) + width_in(e1);
    } else {
        mismatch("columns " + std::to_string(m.at) + " and " + std::to_string(m.at + 1) + " interact");
    }
    return splice(d, m.at, 2, {f2, f1});
}

bool inside(int i, int lo, int hi) { return lo <= i && i <= hi; }

TrackedMove seam(const FrontDiagram& d, const MoveSpec& m) {
    if (m.handle < 0 || m.handle >= static_cast<int>(d.n_handles())) throw std::invalid_argument("no such handle");
    if (d.events.empty()) mismatch("empty event word");
    const auto h = static_cast<std::size_t>(m.handle);
    const int P = d.first_position(h);
    const int k = d.slots[h];
    const bool to_front = m.variant == MoveVariant::last_to_first;
    const Event e = to_front ? d.events.back() : d.events.front();
    const int i = e.height;
    const bool is_cusp = e.kind != EventKind::crossing;
    if ((m.move == 4) != is_cusp)
        mismatch(std::string("move ") + std::to_string(m.move) + " needs a " + (m.move == 4 ? "cusp" : "crossing") +
                 " at the seam");
    int delta = 0;
    bool ok = false;
    switch (e.kind) {
        case EventKind::crossing: ok = inside(i, P, P + k - 2); break;
        case EventKind::right_cusp:
            ok = to_front ? inside(i, P, P + k) : inside(i, P, P + k - 2);
            delta = to_front ? 2 : -2;
            break;
        case EventKind::left_cusp:
            ok = to_front ? inside(i, P, P + k - 2) : inside(i, P, P + k);
            delta = to_front ? -2 : 2;
            break;
    }
    if (!ok) mismatch("seam column " + e.str() + " does not lie in handle " + std::to_string(h + 1));
    FrontDiagram next = d;
    next.slots[h] += delta;
    if (to_front) {
        next.events.pop_back();
        next.events.insert(next.events.begin(), e);
        const int n = static_cast<int>(d.events.size());
        return carry(d, next, [=](Piece p) -> std::optional<Piece> {
            if (p.gap >= n) return std::nullopt;
            return Piece{p.gap + 1, p.height};
        });
    }
    next.events.erase(next.events.begin());
    next.events.push_back(e);
    return carry(d, next, [](Piece p) -> std::optional<Piece> {
        if (p.gap == 0) return std::nullopt;
        return Piece{p.gap - 1, p.height};
    });
}

std::vector<Event> swing_block(int P, int k, bool descending_cusp) {
    std::vector<Event> b;
    if (descending_cusp) {
        b.push_back(Event::left(P));
        for (int x = P + 1; x <= P + k - 1; ++x) b.push_back(Event::cross(x));
        b.push_back(Event::right(P + k));
    } else {
        b.push_back(Event::left(P + k));
        for (int x = P + k - 1; x >= P + 1; --x) b.push_back(Event::cross(x));
        b.push_back(Event::right(P));
    }
    return b;
}

struct SwingShape {
    int P = 0, k = 0;
    bool down = true;  // pattern produced by swing_down
};

SwingShape swing_shape(const FrontDiagram& d, const MoveSpec& m) {
    if (m.handle < 0 || m.handle >= static_cast<int>(d.n_handles())) throw std::invalid_argument("no such handle");
    const auto h = static_cast<std::size_t>(m.handle);
    SwingShape s{d.first_position(h), d.slots[h], m.variant != MoveVariant::swing_up};
    if (s.k < 1) mismatch("handle " + std::to_string(h + 1) + " has no strands");
    if (m.variant != MoveVariant::unswing) return s;
    const int len = s.k + 1;
    if (static_cast<int>(d.events.size()) < 2 * len) mismatch("event word too short to unswing");
    auto front = slice(d.events, 0, len);
    auto back = slice(d.events, static_cast<int>(d.events.size()) - len, len);
    for (bool down : {true, false}) {
        if (front == swing_block(s.P, s.k, down) && back == swing_block(s.P, s.k, !down)) {
            s.down = down;
            return s;
        }
    }
    mismatch("no swing around handle " + std::to_string(h + 1) + " at the seam");
}

TrackedMove swing(const FrontDiagram& d, const MoveSpec& m) {
    const SwingShape s = swing_shape(d, m);
    const int len = s.k + 1;
    FrontDiagram next = d;
    if (m.variant == MoveVariant::unswing) {
        next.events.erase(next.events.end() - len, next.events.end());
        next.events.erase(next.events.begin(), next.events.begin() + len);
        const int n = static_cast<int>(d.events.size());
        return carry(d, next, [=](Piece p) -> std::optional<Piece> {
            if (p.gap < len || p.gap > n - len) return std::nullopt;
            return Piece{p.gap - len, p.height};
        });
    }
    auto pre = swing_block(s.P, s.k, s.down);
    auto post = swing_block(s.P, s.k, !s.down);
    next.events.insert(next.events.begin(), pre.begin(), pre.end());
    next.events.insert(next.events.end(), post.begin(), post.end());
    return carry(d, next, [=](Piece p) -> std::optional<Piece> { return Piece{p.gap + len, p.height}; });
}

// The strand a swing reroutes, as a piece of d (top or bottom slot of the
// handle, or for unswing the matching box piece just inside the prefix).
Piece swing_strand(const FrontDiagram& d, const MoveSpec& m) {
    const SwingShape s = swing_shape(d, m);
    const int gap = m.variant == MoveVariant::unswing ? s.k + 1 : 0;
    return {gap, s.down ? s.P : s.P + s.k - 1};
}

}  // namespace

TrackedMove apply_move_tracked(const FrontDiagram& d, const MoveSpec& m) {
    auto report = validate(d);
    if (!report.ok()) throw InvariantError(report.violations.front());
    FrontTrace t(d);
    using V = MoveVariant;
    switch (m.move) {
        case 0:
            if (m.variant == V::commute) return commute(d, m);
            break;
        case 1:
            if (m.variant == V::fishtail_below || m.variant == V::fishtail_above || m.variant == V::fishtail_remove)
                return fishtail(d, t, m);
            break;
        case 2:
            if (m.variant == V::cusp_strand_above || m.variant == V::cusp_strand_below ||
                m.variant == V::cusp_strand_collapse)
                return cusp_strand(d, t, m);
            break;
        case 3:
            if (m.variant == V::triple) return triple(d, m);
            break;
        case 4:
        case 5:
            if (m.variant == V::last_to_first || m.variant == V::first_to_last) return seam(d, m);
            break;
        case 6:
            if (m.variant == V::swing_down || m.variant == V::swing_up || m.variant == V::unswing) return swing(d, m);
            break;
        default: throw std::invalid_argument("moves are numbered 0 to 6");
    }
    throw std::invalid_argument("variant does not belong to move " + std::to_string(m.move));
}

FrontDiagram apply_move(const FrontDiagram& d, const MoveSpec& m) { return apply_move_tracked(d, m).diagram; }

int move6_component(const FrontDiagram& d, const MoveSpec& m) {
    if (m.move != 6) throw std::invalid_argument("not a move 6");
    return FrontTrace(d).component(swing_strand(d, m));
}

int move6_signed_runs(const FrontDiagram& d, const MoveSpec& m) {
    if (m.move != 6) throw std::invalid_argument("not a move 6");
    FrontTrace t(d);
    const Piece s = swing_strand(d, m);
    const int eps = t.direction(s);
    const int runs = component_stats(d, t.component(s)).handle_runs[static_cast<std::size_t>(m.handle)];
    return m.variant == MoveVariant::unswing ? eps * runs : -eps * runs;
}

}  // namespace stein
