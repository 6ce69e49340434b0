#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stein::cli {

// Bad arguments on the command line (exit code 1).  Library errors about the
// input data (ParseError, InvariantError, std::invalid_argument) map to 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MoveArgs {
    int move = 0;
    std::string variant;
    int at = 0;
    int height = 1;
    int handle = 1;
};

struct StabilizeArgs {
    int component = 1;
    std::string direction;
    int gap = 0;
    std::optional<int> height;
};

struct SeifertArgs {
    std::string base = "o0";
    std::vector<std::string> coefficients;
    long long search_bound = 100;
};

struct BorromeanArgs {
    std::vector<std::string> coefficients;
    std::vector<std::string> twist_knot;     // l m r
    std::vector<std::string> two_component;  // m r1 r2
};

int stats(const std::string& path, std::ostream& out);
int lint(const std::string& path, std::ostream& out);
int check_stein(const std::string& path, std::ostream& out);
int surger(const std::string& path, std::ostream& out);
int h1(const std::string& path, std::ostream& out);
int expand(const std::string& path, std::ostream& out);
int twist(const std::string& path, int i, const std::string& m, std::ostream& out);
int dunk(const std::string& path, int i, std::optional<int> j, std::optional<std::string> inverse, std::ostream& out);
int blowdown(const std::string& path, int i, std::ostream& out);
int plan(const std::string& path, std::ostream& out);
int gamma(const std::string& path, const std::optional<std::string>& sublink, std::ostream& out);
int theta(const std::string& path, std::ostream& out);
int seifert(const SeifertArgs& args, std::ostream& out);
int brieskorn(const std::vector<std::string>& p, const std::string& orientation, long long search_bound, std::ostream& out);
int borromean(const BorromeanArgs& args, std::ostream& out);
int move(const std::string& path, const MoveArgs& args, std::ostream& out);
int stabilize(const std::string& path, const StabilizeArgs& args, std::ostream& out);

}  // namespace stein::cli
