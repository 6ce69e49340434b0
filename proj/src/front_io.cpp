#include "stein/front.hpp"

#include "text_lines.hpp"

#include <sstream>

namespace stein {

namespace {

bool is_event_token(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'L' && s[0] != 'R' && s[0] != 'X')) return false;
    for (std::size_t k = 1; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    return true;
}

}  // namespace

FrontDiagram parse_front_unchecked(std::string_view src) {
    using namespace text;
    auto lines = tokenize(src);
    if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'front 1'");
    const Line& head = lines[0];
    if (head.tokens[0].text != "front" || head.tokens.size() != 2 || head.tokens[1].text != "1")
        throw ParseError(head.number, 1, "expected header 'front 1'");

    FrontDiagram d;
    bool have_handles = false, have_events = false, in_events = false;
    std::vector<bool> slot_seen;
    for (std::size_t n = 1; n < lines.size(); ++n) {
        const Line& line = lines[n];
        const std::string& key = line.tokens[0].text;
        if (in_events && is_event_token(key)) {
            for (const auto& t : line.tokens) {
                if (!is_event_token(t.text)) throw ParseError(line.number, t.column, "bad event token '" + t.text + "'");
                d.events.push_back(parse_events(t.text).front());
            }
            continue;
        }
        in_events = false;
        if (key == "handles") {
            if (have_handles) throw ParseError(line.number, 1, "duplicate 'handles'");
            expect_arity(line, 2);
            have_handles = true;
            d.slots.assign(static_cast<std::size_t>(parse_int(line, line.tokens[1], 0, 1024)), 0);
            slot_seen.assign(d.slots.size(), false);
        } else if (key == "handle") {
            if (!have_handles) throw ParseError(line.number, 1, "'handle' before 'handles'");
            expect_arity(line, 4);
            auto h = static_cast<std::size_t>(parse_int(line, line.tokens[1], 1, static_cast<long long>(d.slots.size())) - 1);
            if (line.tokens[2].text != "slots") throw ParseError(line.number, line.tokens[2].column, "expected 'slots'");
            if (slot_seen[h]) throw ParseError(line.number, 1, "duplicate handle " + std::to_string(h + 1));
            slot_seen[h] = true;
            d.slots[h] = static_cast<int>(parse_int(line, line.tokens[3], 0, 4096));
        } else if (key == "events") {
            if (have_events) throw ParseError(line.number, 1, "duplicate 'events'");
            have_events = true;
            in_events = true;
            for (std::size_t k = 1; k < line.tokens.size(); ++k) {
                const auto& t = line.tokens[k];
                if (!is_event_token(t.text)) throw ParseError(line.number, t.column, "bad event token '" + t.text + "'");
                d.events.push_back(parse_events(t.text).front());
            }
        } else if (key == "orient") {
            expect_arity(line, 3);
            int c = static_cast<int>(parse_int(line, line.tokens[1], 1, 1 << 20));
            const std::string& s = line.tokens[2].text;
            if (s != "+" && s != "-") throw ParseError(line.number, line.tokens[2].column, "orientation must be + or -");
            if (d.orientation.count(c)) throw ParseError(line.number, 1, "duplicate orientation for component " + std::to_string(c));
            d.orientation[c] = s == "+" ? 1 : -1;
        } else if (key == "coeff") {
            expect_arity(line, 3);
            int c = static_cast<int>(parse_int(line, line.tokens[1], 1, 1 << 20));
            if (d.coefficients.count(c)) throw ParseError(line.number, 1, "duplicate coefficient for component " + std::to_string(c));
            d.coefficients[c] = line.tokens[2].text == "stein" ? Coefficient::stein()
                                                              : Coefficient::of(parse_rational(line, line.tokens[2]));
        } else {
            throw ParseError(line.number, line.tokens[0].column, "unknown key '" + key + "'");
        }
    }
    if (!have_handles) d.slots.clear();
    for (std::size_t h = 0; h < slot_seen.size(); ++h)
        if (!slot_seen[h]) throw InvariantError("handle " + std::to_string(h + 1) + ": slot count missing");
    return d;
}

FrontDiagram parse_front(std::string_view src) {
    FrontDiagram d = parse_front_unchecked(src);
    auto report = validate(d);
    if (!report.ok()) throw InvariantError(report.violations.front());
    return d;
}

std::string serialize_front(const FrontDiagram& d) {
    std::ostringstream os;
    os << "front 1\nhandles " << d.n_handles() << "\n";
    for (std::size_t h = 0; h < d.n_handles(); ++h) os << "handle " << h + 1 << " slots " << d.slots[h] << "\n";
    os << "events";
    for (const auto& e : d.events) os << ' ' << e.str();
    os << "\n";
    for (const auto& [c, s] : d.orientation) os << "orient " << c << ' ' << (s > 0 ? '+' : '-') << "\n";
    for (const auto& [c, k] : d.coefficients)
        if (k.kind != Coefficient::Kind::none) os << "coeff " << c << ' ' << k.str() << "\n";
    return os.str();
}

}  // namespace stein
