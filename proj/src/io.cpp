#include "liecohom/io.hpp"

#include <fstream>
#include <sstream>

namespace liecohom {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

std::size_t index_from_json(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0)) {
        throw ParseError(std::string(what) + " must be a non-negative integer, got " + j.dump());
    }
    return j.get<std::size_t>();
}

}  // namespace

json algebra_to_json(const LieAlgebra& g) {
    json brackets = json::array();
    for (const auto& b : g.brackets()) {
        json result = json::array();
        for (const auto& [k, c] : b.result) result.push_back(json::array({k, c.str()}));
        brackets.push_back({{"left", b.left}, {"right", b.right}, {"result", std::move(result)}});
    }
    return {{"name", g.name()}, {"basis", g.labels()}, {"brackets", std::move(brackets)}};
}

LieAlgebra algebra_from_json(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("algebra must be a JSON object");
        const std::string name = j.value("name", std::string{});
        if (!j.contains("basis") || !j.at("basis").is_array()) throw ParseError("algebra needs a \"basis\" array");
        std::vector<std::string> labels;
        for (const auto& l : j.at("basis")) {
            if (!l.is_string()) throw ParseError("basis labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        std::vector<BracketEntry> entries;
        if (j.contains("brackets")) {
            if (!j.at("brackets").is_array()) throw ParseError("\"brackets\" must be an array");
            for (const auto& b : j.at("brackets")) {
                if (!b.is_object() || !b.contains("left") || !b.contains("right") || !b.contains("result")) {
                    throw ParseError("bracket entries need left, right and result");
                }
                BracketEntry e{index_from_json(b.at("left"), "left"), index_from_json(b.at("right"), "right"), {}};
                if (!b.at("result").is_array()) throw ParseError("bracket result must be an array");
                for (const auto& term : b.at("result")) {
                    if (!term.is_array() || term.size() != 2) throw ParseError("result terms are [index, \"p/q\"] pairs");
                    e.result.push_back({index_from_json(term[0], "result index"), rational_from_json(term[1])});
                }
                entries.push_back(std::move(e));
            }
        }
        LieAlgebra g(name, std::move(labels), entries);
        if (auto bad = validate(g)) throw NotALieAlgebra(g, *bad);
        return g;
    } catch (const NotALieAlgebra&) {
        throw;
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string serialize(const LieAlgebra& g) { return algebra_to_json(g).dump(2) + "\n"; }

LieAlgebra parse_algebra(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

LieAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open algebra file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
}

json cochain_to_json(const Representation& rho, std::size_t n, std::span<const Rational> phi) {
    if (phi.size() != cochain_dim(rho, n)) throw DimensionMismatch("cochain has the wrong number of coordinates");
    const std::size_t mdim = rho.module_dim();
    const auto tuples = wedge_tuples(rho.algebra().dim(), n);
    json out = json::array();
    for (std::size_t idx = 0; idx < phi.size(); ++idx) {
        if (phi[idx].is_zero()) continue;
        out.push_back(json::array({tuples[idx / mdim], idx % mdim, phi[idx].str()}));
    }
    return out;
}

Vector cochain_from_json(const Representation& rho, std::size_t n, const json& j) {
    if (!j.is_array()) throw ParseError("cochain must be an array of [[indices], m, \"p/q\"] terms");
    Vector phi(cochain_dim(rho, n));
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_array()) {
            throw ParseError("cochain terms are [[i_1, ..., i_n], m, \"p/q\"]");
        }
        IndexTuple t;
        for (const auto& i : term[0]) t.push_back(index_from_json(i, "cochain argument"));
        if (t.size() != n) throw ParseError("cochain term has " + std::to_string(t.size()) + " arguments, expected " + std::to_string(n));
        const int sign = sort_with_sign(t);
        if (sign == 0) throw ParseError("cochain term repeats an argument");
        const std::size_t m = index_from_json(term[1], "module index");
        Rational value;
        try {
            value = rational_from_json(term[2]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        try {
            phi[cochain_index(rho, t, m)] += Rational(sign) * value;
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    return phi;
}

}  // namespace liecohom
