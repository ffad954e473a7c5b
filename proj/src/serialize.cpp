#include "klab/serialize.hpp"

#include "klab/errors.hpp"

#include <sstream>

namespace klab {

using nlohmann::json;

json integer_to_json(const BigInt& z) {
    if (fits_int64(z)) return json(static_cast<std::int64_t>(z.get_si()));
    return json(z.get_str());
}

json rational_to_json(const Rational& q) {
    return json{{"num", integer_to_json(q.get_num())}, {"den", integer_to_json(q.get_den())}};
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    json labels = json::object();
    for (const auto& [v, name] : g.labels()) labels[std::to_string(v)] = name;
    return json{{"n_vertices", g.vertex_count()}, {"edges", std::move(edges)}, {"labels", std::move(labels)}};
}

Graph graph_from_json(const json& j) {
    try {
        const auto n = j.at("n_vertices").get<std::int64_t>();
        if (n < 0) throw InvalidInput("n_vertices must be nonnegative");
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a [u, v] pair");
            const auto u = e[0].get<std::int64_t>(), v = e[1].get<std::int64_t>();
            if (u < 0 || v < 0) throw InvalidInput("negative vertex index");
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        }
        std::map<Vertex, std::string> labels;
        if (j.contains("labels")) {
            for (const auto& [key, value] : j.at("labels").items())
                labels[static_cast<Vertex>(std::stoul(key))] = value.get<std::string>();
        }
        return Graph(static_cast<std::size_t>(n), std::move(edges), std::move(labels));
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
    } catch (const std::logic_error& e) {
        throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
    }
}

json spectrum_to_json(const Spectrum& s) {
    json out;
    if (s.is_exact()) {
        json exact = json::array();
        for (const auto& e : s.exact_entries())
            exact.push_back({integer_to_json(e.value.get_num()), integer_to_json(e.value.get_den()), e.multiplicity});
        out["exact"] = std::move(exact);
        if (s.cubic())
            out["cubic"] = {{"e1", rational_to_json(s.cubic()->e1)},
                            {"e2", rational_to_json(s.cubic()->e2)},
                            {"e3", rational_to_json(s.cubic()->e3)}};
        else
            out["cubic"] = nullptr;
        out["floating"] = nullptr;
    } else {
        out["exact"] = json::array();
        out["cubic"] = nullptr;
        out["floating"] = s.floating_values();
    }
    return out;
}

std::set<int> parse_index_list(const std::string& text) {
    std::set<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InvalidParameter("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw InvalidParameter("not an integer: '" + item + "'");
        if (!out.insert(value).second) throw InvalidParameter("index listed twice: " + item);
    }
    return out;
}

} // namespace klab
