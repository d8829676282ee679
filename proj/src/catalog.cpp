#include "liecohom/catalog.hpp"

#include "liecohom/io.hpp"

#include <charconv>
#include <numeric>

namespace liecohom::catalog {

namespace {

void require_positive(std::size_t n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + " needs n >= 1");
}

std::vector<std::size_t> range(std::size_t first, std::size_t last) {
    std::vector<std::size_t> v(last - first);
    std::iota(v.begin(), v.end(), first);
    return v;
}

std::size_t parse_parameter(const std::string& spec, std::size_t colon) {
    const std::string text = spec.substr(colon + 1);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("bad parameter in algebra spec '" + spec + "'");
    }
    return value;
}

}  // namespace

LieAlgebra sl2() {
    return LieAlgebra("sl2", {"e", "f", "h"},
                      {{0, 1, {{2, Rational(1)}}}, {0, 2, {{0, Rational(-2)}}}, {1, 2, {{1, Rational(2)}}}});
}

LieAlgebra heisenberg(std::size_t n) {
    require_positive(n, "heisenberg");
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("y" + std::to_string(i));
    labels.push_back("z");
    std::vector<BracketEntry> entries;
    for (std::size_t i = 0; i < n; ++i) entries.push_back({i, n + i, {{2 * n, Rational(1)}}});
    return LieAlgebra("heisenberg:" + std::to_string(n), std::move(labels), entries);
}

std::vector<SparseMatrix> schrodinger_action(std::size_t n) {
    require_positive(n, "schrodinger");
    const std::size_t d = 2 * n + 1;
    SparseMatrix e(d, d), f(d, d), h(d, d);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t x = i, y = n + i;
        e.add(x, y, Rational(1));   // [e, y_i] = x_i
        f.add(y, x, Rational(1));   // [f, x_i] = y_i
        h.add(x, x, Rational(1));   // [h, x_i] = x_i
        h.add(y, y, Rational(-1));  // [h, y_i] = -y_i
    }
    return {e, f, h};
}

LieAlgebra schrodinger(std::size_t n) {
    return semidirect(sl2(), heisenberg(n), schrodinger_action(n), "schrodinger:" + std::to_string(n));
}

LieAlgebra schrodinger_mod_center(std::size_t n) {
    const LieAlgebra sch = schrodinger(n);
    return quotient(sch, center(sch), "schrodinger-quotient:" + std::to_string(n));
}

LieAlgebra abelian(std::size_t k) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= k; ++i) labels.push_back("a" + std::to_string(i));
    return LieAlgebra("abelian:" + std::to_string(k), std::move(labels));
}

LieAlgebra resolve(const std::string& spec) {
    if (spec == "sl2") return sl2();
    if (spec.rfind("file:", 0) == 0) return load_algebra_file(spec.substr(5));
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string family = spec.substr(0, colon);
        if (family == "heisenberg") return heisenberg(parse_parameter(spec, colon));
        if (family == "schrodinger") return schrodinger(parse_parameter(spec, colon));
        if (family == "schrodinger-quotient") return schrodinger_mod_center(parse_parameter(spec, colon));
        if (family == "abelian") return abelian(parse_parameter(spec, colon));
    }
    throw std::invalid_argument("unknown algebra spec '" + spec + "'");
}

std::optional<Split> default_split(const std::string& spec) {
    if (spec.rfind("file:", 0) == 0) return std::nullopt;
    const LieAlgebra g = resolve(spec);
    const std::string family = spec.substr(0, spec.find(':'));
    if (family == "sl2") return Split{range(0, 3), {}};
    if (family == "schrodinger" || family == "schrodinger-quotient") return Split{range(0, 3), range(3, g.dim())};
    if (family == "heisenberg" || family == "abelian") return Split{{}, range(0, g.dim())};
    return std::nullopt;
}

}  // namespace liecohom::catalog
