#pragma once

#include "stein/presentation.hpp"
#include "stein/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace stein {

enum class EventKind : char { left_cusp = 'L', right_cusp = 'R', crossing = 'X' };

// One column of the front.  Heights are 1-based, counted from the top, and
// refer to the strands present just before the column (for a left cusp: the
// height of the new upper branch after it).
struct Event {
    EventKind kind = EventKind::crossing;
    int height = 1;

    static Event left(int i) { return {EventKind::left_cusp, i}; }
    static Event right(int i) { return {EventKind::right_cusp, i}; }
    static Event cross(int i) { return {EventKind::crossing, i}; }

    std::string str() const;
    friend bool operator==(const Event&, const Event&) = default;
};

std::vector<Event> parse_events(std::string_view tokens);
std::string events_str(const std::vector<Event>& events);

struct Coefficient {
    enum class Kind { none, value, stein };
    Kind kind = Kind::none;
    ExtRational value;

    static Coefficient none() { return {}; }
    static Coefficient of(const ExtRational& r) { return {Kind::value, r}; }
    static Coefficient stein() { return {Kind::stein, {}}; }

    std::string str() const;
    friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

// A Legendrian tangle in a box with 1-handle ball pairs on its sides.  The
// edge strands of handle h occupy consecutive global positions, handles in
// order, and the p-th left edge strand is joined through its handle to the
// p-th right edge strand.
struct FrontDiagram {
    std::vector<int> slots;  // per handle
    std::vector<Event> events;
    std::map<int, int> orientation;  // component id -> +1 (rightward) or -1
    std::map<int, Coefficient> coefficients;

    std::size_t n_handles() const { return slots.size(); }
    int edge_count() const;
    int first_position(std::size_t handle) const;  // 1-based global position

    friend bool operator==(const FrontDiagram&, const FrontDiagram&) = default;
};

// A strand segment: height `height` in gap `gap`, where gap g lies after the
// first g events (gap 0 is the left edge, gap N the right edge).
struct Piece {
    int gap = 0;
    int height = 1;
    friend bool operator==(const Piece&, const Piece&) = default;
};

// Connectivity of a structurally sound diagram: component labels and
// traversal directions of every piece.  Throws InvariantError when the
// event word itself is malformed.
class FrontTrace {
public:
    explicit FrontTrace(const FrontDiagram& d);

    int gaps() const { return static_cast<int>(counts_.size()); }
    int count(int gap) const { return counts_[static_cast<std::size_t>(gap)]; }
    int components() const { return n_components_; }
    int component(Piece p) const;
    int direction(Piece p) const;  // after applying the orientation table
    Piece first_piece(int component) const;

private:
    std::size_t index(Piece p) const;

    std::vector<int> counts_;
    std::vector<std::size_t> offsets_;
    std::vector<int> component_;
    std::vector<int> raw_direction_;
    std::vector<int> sign_;  // per component, from the orientation table
    std::vector<Piece> first_;
    int n_components_ = 0;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const FrontDiagram& d);

struct ComponentStats {
    int component = 0;
    int w = 0;
    int lambda = 0, rho = 0;
    int lambda_plus = 0, lambda_minus = 0, rho_plus = 0, rho_minus = 0;
    int t_plus = 0, t_minus = 0;
    int tb = 0;
    int r = 0;
    std::vector<int> handle_runs;      // signed passages per handle
    std::vector<int> handle_passages;  // unsigned passages per handle

    int total_passages() const;
};

ComponentStats component_stats(const FrontDiagram& d, int component);
std::vector<ComponentStats> all_component_stats(const FrontDiagram& d);
int linking_number(const FrontDiagram& d, int c1, int c2);

enum class StabilizationDirection { up, down };

FrontDiagram stabilize(const FrontDiagram& d, int component, Piece location, StabilizationDirection dir);

enum class MoveVariant {
    // move 1
    fishtail_below,
    fishtail_above,
    fishtail_remove,
    // move 2
    cusp_strand_above,
    cusp_strand_below,
    cusp_strand_collapse,
    // move 3
    triple,
    // moves 4 and 5
    last_to_first,
    first_to_last,
    // move 6
    swing_down,
    swing_up,
    unswing,
    // move 0: planar isotopy swapping two adjacent independent columns
    commute,
};

// `at` is an event index for rewrites of existing columns and a gap index for
// insertions (fishtail insertion).  `height` is only read by fishtail
// insertion and `handle` (0-based) only by moves 4 to 6.
struct MoveSpec {
    int move = 1;
    MoveVariant variant = MoveVariant::fishtail_below;
    int at = 0;
    int height = 1;
    int handle = 0;
};

FrontDiagram apply_move(const FrontDiagram& d, const MoveSpec& m);

struct TrackedMove {
    FrontDiagram diagram;
    std::vector<int> image;  // image[c] is the id in `diagram` of component c of the input; image[0] unused
};

TrackedMove apply_move_tracked(const FrontDiagram& d, const MoveSpec& m);

// For move 6: the integer s with tb(K) changing by 2s on the strand's component K.
int move6_signed_runs(const FrontDiagram& d, const MoveSpec& m);
// Component (in d) of the strand a move 6 reroutes.
int move6_component(const FrontDiagram& d, const MoveSpec& m);

struct SteinFormReport {
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

SteinFormReport check_stein_form(const FrontDiagram& d);

SurgeryPresentation surger_handles(const FrontDiagram& d);

FrontDiagram parse_front(std::string_view text);
// Syntax only; the result may fail validate().
FrontDiagram parse_front_unchecked(std::string_view text);
std::string serialize_front(const FrontDiagram& d);

}  // namespace stein
