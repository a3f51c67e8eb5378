#include "abelaut/report/json_io.hpp"

#include "abelaut/error.hpp"

#include <fstream>
#include <sstream>

namespace abelaut {

namespace {

std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string field_path(const std::string& path, const std::string& key) { return path + "." + key; }

const Json& require(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw ParseError("expected an object", path);
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError("missing field \"" + key + "\"", path);
    return *it;
}

void require_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError("expected an array", path);
}

// Error::what() starts with "<kind>: "; keep only the message.
std::string bare_message(const Error& e) {
    const std::string w = e.what();
    const auto prefix = std::string(to_string(e.kind())) + ": ";
    return w.rfind(prefix, 0) == 0 ? w.substr(prefix.size()) : w;
}

template <class F>
auto wrap(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw ParseError(bare_message(e), path);
    }
}

long integer_field(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) throw ParseError("expected an integer", path);
    return j.get<long>();
}

}  // namespace

Json parse_json_text(std::string_view text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed JSON", source + ":" + std::to_string(line) + ":" + std::to_string(column));
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path);
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError("expected a rational string such as \"-3/4\"", path);
    return wrap(path, [&] { return Rational::parse(j.get<std::string>()); });
}

Surd surd_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Surd(Rational(j.get<long>()));
    if (!j.is_string()) throw ParseError("expected a number string such as \"1/3*sqrt(3)\"", path);
    return wrap(path, [&] { return Surd::parse(j.get<std::string>()); });
}

SurdMatrix structure_from_json(const Json& j, const std::string& path) {
    require_array(j, path);
    std::vector<std::vector<Surd>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string rp = index_path(path, i);
        require_array(j[i], rp);
        if (j[i].size() != j.size()) throw ParseError("matrix must be square", rp);
        std::vector<Surd> row;
        for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(surd_from_json(j[i][k], index_path(rp, k)));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix", path);
    return SurdMatrix(std::move(rows));
}

IntMatrix int_matrix_from_json(const Json& j, const std::string& path) {
    require_array(j, path);
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string rp = index_path(path, i);
        require_array(j[i], rp);
        if (j[i].size() != j.size()) throw ParseError("matrix must be square", rp);
        std::vector<Integer> row;
        for (std::size_t k = 0; k < j[i].size(); ++k) {
            const auto r = rational_from_json(j[i][k], index_path(rp, k));
            if (!r.is_integer()) throw ParseError("expected an integer entry", index_path(rp, k));
            row.push_back(r.numerator());
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix", path);
    return IntMatrix(std::move(rows));
}

TorsionPoint point_from_json(const Json& j, const std::string& path) {
    require_array(j, path);
    std::vector<Rational> coords;
    for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(rational_from_json(j[i], index_path(path, i)));
    return TorsionPoint(std::move(coords));
}

LatticeTorus parse_torus(const Json& j, const std::string& path) {
    const std::string jp = field_path(path, "J");
    const SurdMatrix J = structure_from_json(require(j, "J", path), jp);
    if (j.contains("g")) {
        const long g = integer_field(j["g"], field_path(path, "g"));
        if (g <= 0 || static_cast<std::size_t>(2 * g) != J.rows())
            throw ParseError("g = " + std::to_string(g) + " does not match a " + std::to_string(J.rows()) + "x" +
                                 std::to_string(J.rows()) + " complex structure",
                             field_path(path, "g"));
    }
    return wrap(jp, [&] { return make_torus(J); });
}

SystemInput parse_system(const Json& j) {
    if (!j.is_object()) throw ParseError("expected an object", "$");
    SystemInput in;
    std::vector<LatticeTorus> factors;
    if (j.contains("factors")) {
        const auto& fs = j["factors"];
        require_array(fs, "$.factors");
        if (fs.empty()) throw ParseError("at least one factor is needed", "$.factors");
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const std::string fp = index_path("$.factors", i);
            factors.push_back(parse_torus(fs[i], fp));
            std::string name = "factor" + std::to_string(i + 1);
            if (fs[i].contains("name")) {
                if (!fs[i]["name"].is_string()) throw ParseError("expected a string", field_path(fp, "name"));
                name = fs[i]["name"].get<std::string>();
            }
            in.names.push_back(std::move(name));
        }
    } else if (j.contains("J")) {
        factors.push_back(parse_torus(j, "$"));
        in.names.push_back(j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "torus");
        in.single_torus = true;
    } else {
        throw ParseError("expected a field \"J\" or \"factors\"", "$");
    }
    std::size_t total = 0;
    for (const auto& f : factors) total += f.dim();

    std::vector<TorsionPoint> sigma;
    if (j.contains("sigma_generators")) {
        const auto& sg = j["sigma_generators"];
        require_array(sg, "$.sigma_generators");
        for (std::size_t i = 0; i < sg.size(); ++i) {
            const std::string sp = index_path("$.sigma_generators", i);
            sigma.push_back(point_from_json(sg[i], sp));
            if (sigma.back().dim() != total)
                throw ParseError("expected " + std::to_string(total) + " coordinates", sp);
        }
    }
    in.decomp = wrap("$.sigma_generators", [&] { return make_decomposition(std::move(factors), std::move(sigma)); });

    if (j.contains("P")) {
        in.P = point_from_json(j["P"], "$.P");
        if (in.P->dim() != total) throw ParseError("expected " + std::to_string(total) + " coordinates", "$.P");
    }
    if (j.contains("p")) {
        const long p = integer_field(j["p"], "$.p");
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw ParseError("p must be prime", "$.p");
        in.p = static_cast<unsigned>(p);
    }
    if (j.contains("chi")) in.chi = integer_field(j["chi"], "$.chi");
    if (j.contains("entry_bound")) {
        const long b = integer_field(j["entry_bound"], "$.entry_bound");
        if (b < 0 || b > 10) throw ParseError("entry bound must lie in [0, 10]", "$.entry_bound");
        in.entry_bound = static_cast<int>(b);
    }
    return in;
}

std::vector<FiberAutomorphism> parse_candidates(const Json& j, std::size_t dim) {
    const auto& list = require(j, "candidates", "$");
    require_array(list, "$.candidates");
    std::vector<FiberAutomorphism> out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string cp = index_path("$.candidates", i);
        const auto& c = list[i];
        FiberAutomorphism f;
        f.name = c.contains("name") && c["name"].is_string() ? c["name"].get<std::string>() : "candidate" + std::to_string(i + 1);
        const auto& phi = require(c, "phi", cp);
        if (phi.is_string() && phi.get<std::string>() == "identity") {
            f.phi = int_identity(dim);
        } else {
            f.phi = int_matrix_from_json(phi, field_path(cp, "phi"));
            if (f.phi.rows() != dim)
                throw ParseError("expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix",
                                 field_path(cp, "phi"));
            const Integer det = determinant_bareiss(f.phi);
            if (abs(det) != Integer(1))
                throw ParseError("phi is not invertible over Z (det = " + det.to_string() + ")", field_path(cp, "phi"));
        }
        f.c = c.contains("c") ? point_from_json(c["c"], field_path(cp, "c")) : TorsionPoint::zero(dim);
        if (f.c.dim() != dim) throw ParseError("expected " + std::to_string(dim) + " coordinates", field_path(cp, "c"));
        out.push_back(std::move(f));
    }
    return out;
}

Json to_json(const Rational& r) { return r.to_string(); }
Json to_json(const Surd& s) { return s.to_string(); }

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (m(i, k).fits_long()) row.push_back(m(i, k).to_long());
            else row.push_back(m(i, k).to_string());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const SurdMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const TorsionPoint& x) { return x.to_strings(); }

Json torus_to_json(const LatticeTorus& t) { return Json{{"g", t.g}, {"J", to_json(t.J)}}; }

Json decomposition_to_json(const IsogenyDecomposition& d) {
    Json factors = Json::array();
    for (const auto& f : d.factors) factors.push_back(torus_to_json(f));
    Json sigma = Json::array();
    for (const auto& s : d.sigma_generators) sigma.push_back(to_json(s));
    return Json{{"factors", factors}, {"sigma_generators", sigma}};
}

}  // namespace abelaut
