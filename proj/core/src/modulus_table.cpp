#include "tricode/errors.hpp"
#include "tricode/gf.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace tricode {

namespace {

// Monic primitive polynomials over F_3, coefficients low-to-high with the leading 1.
// Degrees up to 17 are the first primitive polynomial in lexicographic order of
// (c_0, ..., c_{d-1}); from 18 on, the first trinomial or tetranomial found
// (full lexicographic search is too slow there).
const std::map<int, std::vector<std::uint8_t>>& builtin_table() {
    static const std::map<int, std::vector<std::uint8_t>> table{
        {1, {1, 1}},
        {2, {2, 1, 1}},
        {3, {1, 0, 2, 1}},
        {4, {2, 0, 0, 1, 1}},
        {5, {1, 0, 0, 0, 2, 1}},
        {6, {2, 0, 0, 0, 0, 1, 1}},
        {7, {1, 0, 0, 0, 0, 1, 2, 1}},
        {8, {2, 0, 0, 0, 0, 1, 0, 0, 1}},
        {9, {1, 0, 0, 0, 0, 0, 2, 1, 0, 1}},
        {10, {2, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1}},
        {11, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1}},
        {12, {2, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 1}},
        {13, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1}},
        {14, {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
        {15, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1}},
        {16, {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 1, 1}},
        {17, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1}},
        {18, {2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
        {19, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1}},
        {20, {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1}},
        {21, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1}},
        {22, {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {23, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1}},
        {24, {2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
    };
    return table;
}

std::map<int, std::vector<std::uint8_t>> read_override(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigurationError("cannot open modulus table override " + path);
    std::map<int, std::vector<std::uint8_t>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        for (auto& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::vector<std::uint8_t> poly;
        long c = 0;
        while (ls >> c) {
            if (c < 0 || c > 255) throw IntegrityError(path + ":" + std::to_string(lineno) + ": coefficient out of range");
            poly.push_back(static_cast<std::uint8_t>(c));
        }
        if (!ls.eof()) throw IntegrityError(path + ":" + std::to_string(lineno) + ": not a list of integers");
        if (poly.empty()) continue;
        if (poly.size() < 2) throw IntegrityError(path + ":" + std::to_string(lineno) + ": degree must be at least 1");
        out[static_cast<int>(poly.size()) - 1] = std::move(poly);
    }
    return out;
}

} // namespace

std::vector<std::uint8_t> builtin_modulus(int p, int degree) {
    if (p != 3) throw ConfigurationError("no modulus table for p = " + std::to_string(p) + " (only p = 3)");
    if (degree < 1 || degree > kMaxDegree)
        throw ConfigurationError("unsupported modulus degree " + std::to_string(degree));
    if (const char* path = std::getenv(kModulusTableEnv); path && *path) {
        const auto override_table = read_override(path);
        if (auto it = override_table.find(degree); it != override_table.end()) return it->second;
    }
    const auto& table = builtin_table();
    auto it = table.find(degree);
    if (it == table.end())
        throw ConfigurationError("no built-in primitive modulus of degree " + std::to_string(degree));
    return it->second;
}

} // namespace tricode
