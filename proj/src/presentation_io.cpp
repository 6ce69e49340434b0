#include "stein/presentation.hpp"

#include "text_lines.hpp"

#include <limits>
#include <sstream>

namespace stein {

SurgeryPresentation parse_surgery(std::string_view src) {
    using namespace text;
    auto lines = tokenize(src);
    if (lines.empty()) throw ParseError(1, 1, "empty input, expected 'surgery 1'");
    const Line& head = lines[0];
    if (head.tokens[0].text != "surgery" || head.tokens.size() != 2 || head.tokens[1].text != "1")
        throw ParseError(head.number, 1, "expected header 'surgery 1'");
    if (lines.size() < 2 || lines[1].tokens[0].text != "components")
        throw ParseError(lines.size() < 2 ? head.number + 1 : lines[1].number, 1, "expected 'components <m>'");
    expect_arity(lines[1], 2);
    const long long m = parse_int(lines[1], lines[1].tokens[1], 0, 4096);

    SurgeryPresentation p;
    p.components.resize(static_cast<std::size_t>(m));
    std::vector<bool> has_coeff(static_cast<std::size_t>(m), false);
    std::map<std::pair<long long, long long>, std::pair<long long, std::size_t>> lk_seen;
    const long long big = std::numeric_limits<long long>::max() / 4;

    auto component = [&](const Line& line, std::size_t k) {
        return static_cast<std::size_t>(parse_int(line, line.tokens[k], 1, m) - 1);
    };
    for (std::size_t n = 2; n < lines.size(); ++n) {
        const Line& line = lines[n];
        const std::string& key = line.tokens[0].text;
        if (key == "coeff") {
            expect_arity(line, 3);
            auto i = component(line, 1);
            if (has_coeff[i]) throw ParseError(line.number, 1, "duplicate coefficient for component " + std::to_string(i + 1));
            has_coeff[i] = true;
            p.components[i].coefficient = parse_rational(line, line.tokens[2]);
        } else if (key == "lk") {
            expect_arity(line, 4);
            auto i = component(line, 1);
            auto j = component(line, 2);
            if (i == j) throw ParseError(line.number, line.tokens[2].column, "lk needs two distinct components");
            long long v = parse_int(line, line.tokens[3], -big, big);
            auto key_pair = std::make_pair(static_cast<long long>(std::min(i, j)), static_cast<long long>(std::max(i, j)));
            auto it = lk_seen.find(key_pair);
            if (it != lk_seen.end() && it->second.first != v)
                throw InvariantError("line " + std::to_string(line.number) + ": asymmetric lk entries for components " +
                                     std::to_string(i + 1) + " and " + std::to_string(j + 1) + " (line " +
                                     std::to_string(it->second.second) + " says " + std::to_string(it->second.first) +
                                     ")");
            lk_seen[key_pair] = {v, line.number};
            p.set_linking(i, j, v);
        } else if (key == "unknot") {
            expect_arity(line, 2);
            p.components[component(line, 1)].is_unknot = true;
        } else if (key == "l0") {
            expect_arity(line, 2);
            p.components[component(line, 1)].in_L0 = true;
        } else if (key == "rot") {
            expect_arity(line, 3);
            p.components[component(line, 1)].rot = Integer(parse_int(line, line.tokens[2], -big, big));
        } else if (key == "tb") {
            expect_arity(line, 3);
            p.components[component(line, 1)].tb = Integer(parse_int(line, line.tokens[2], -big, big));
        } else {
            throw ParseError(line.number, line.tokens[0].column, "unknown key '" + key + "'");
        }
    }
    for (std::size_t i = 0; i < has_coeff.size(); ++i)
        if (!has_coeff[i]) throw InvariantError("component " + std::to_string(i + 1) + ": missing coefficient");
    auto v = p.violations();
    if (!v.empty()) throw InvariantError(v.front());
    return p;
}

std::string serialize_surgery(const SurgeryPresentation& p) {
    std::ostringstream os;
    os << "surgery 1\ncomponents " << p.size() << "\n";
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& c = p.components[i];
        os << "coeff " << i + 1 << " " << c.coefficient.str() << "\n";
        if (c.is_unknot) os << "unknot " << i + 1 << "\n";
        if (c.in_L0) os << "l0 " << i + 1 << "\n";
        if (c.rot) os << "rot " << i + 1 << " " << *c.rot << "\n";
        if (c.tb) os << "tb " << i + 1 << " " << *c.tb << "\n";
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Integer v = p.linking(i, j);
            if (v != 0) os << "lk " << i + 1 << " " << j + 1 << " " << v << "\n";
        }
    return os.str();
}

}  // namespace stein
