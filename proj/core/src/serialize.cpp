#include "tricode/serialize.hpp"

#include "json.hpp"

#include <sstream>

namespace tricode {

using nlohmann::ordered_json;

std::string to_json(const WeightDistribution& d) {
    ordered_json j;
    j["l"] = d.length;
    ordered_json counts = ordered_json::object();
    for (const auto& [w, c] : d.counts) counts[std::to_string(w)] = c.get_str();
    j["counts"] = std::move(counts);
    j["total"] = d.total().get_str();
    return j.dump();
}

std::string to_csv(const WeightDistribution& d) {
    std::ostringstream os;
    os << "weight,count\n";
    for (const auto& [w, c] : d.counts) os << w << ',' << c.get_str() << '\n';
    return os.str();
}

WeightDistribution distribution_from_json(const std::string& text) {
    try {
        const auto j = ordered_json::parse(text);
        WeightDistribution d;
        d.length = j.at("l").get<std::uint64_t>();
        for (const auto& [k, v] : j.at("counts").items()) {
            std::size_t used = 0;
            const auto w = std::stoull(k, &used);
            if (used != k.size()) throw ConfigurationError("bad weight key '" + k + "'");
            d.counts[w] = Integer(v.get<std::string>());
        }
        if (j.contains("total") && Integer(j.at("total").get<std::string>()) != d.total())
            throw ConfigurationError("distribution total does not match its counts");
        return d;
    } catch (const ordered_json::exception& e) {
        throw ConfigurationError(std::string("malformed distribution JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ConfigurationError(std::string("malformed distribution JSON: ") + e.what());
    }
}

std::string to_json(const std::vector<IdentityCheck>& checks) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"lhs", c.lhs.get_str()}, {"rhs", c.rhs.get_str()}, {"match", c.match}});
    return arr.dump();
}

} // namespace tricode
