#include "npoly/io.hpp"

#include <fstream>

#include "npoly/errors.hpp"

namespace npoly {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

long get_long(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return j.get<long>();
}

}  // namespace

DirectSumPolytope polytope_from_json(const Json& j) {
    const long n = get_long(field(j, "n"), "n");
    if (n < 1 || n > 16) throw ParseError("polytope dimension out of range");
    const Json& jb = field(j, "basis");
    const Json& js = field(j, "segments");
    if (!jb.is_array() || static_cast<long>(jb.size()) != n)
        throw ParseError("basis must be an array of n columns");
    if (!js.is_array() || static_cast<long>(js.size()) != n)
        throw ParseError("segments must be an array of n entries");
    std::vector<std::vector<Int>> basis;
    for (const auto& col : jb) {
        if (!col.is_array() || static_cast<long>(col.size()) != n)
            throw ParseError("basis column has wrong length");
        std::vector<Int> c;
        for (const auto& e : col) c.emplace_back(get_long(e, "basis entry"));
        basis.push_back(std::move(c));
    }
    std::vector<Segment1D> segs;
    for (const auto& e : js)
        segs.push_back({get_long(field(e, "d"), "d"), get_long(field(e, "dp"), "dp")});
    try {
        return DirectSumPolytope(std::move(basis), std::move(segs));
    } catch (const MathError& e) {
        throw ParseError(std::string("invalid polytope: ") + e.what());
    }
}

Json polytope_to_json(const DirectSumPolytope& P) {
    Json j;
    j["n"] = P.n();
    Json basis = Json::array();
    for (const auto& col : P.basis_columns()) {
        Json c = Json::array();
        for (const auto& e : col) c.push_back(e.convert_to<long long>());
        basis.push_back(c);
    }
    j["basis"] = basis;
    Json segs = Json::array();
    for (const auto& s : P.segments()) segs.push_back(Json{{"d", s.d}, {"dp", s.dp}});
    j["segments"] = segs;
    return j;
}

TwistVector twist_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("twist must be an array of strings");
    std::vector<Rat> fracs;
    for (const auto& e : j) {
        if (!e.is_string()) throw ParseError("twist entries must be strings \"r/s\"");
        Rat v = parse_rat(e.get<std::string>());
        if (v < 0 || v >= 1) throw ParseError("twist entries must lie in [0,1)");
        fracs.push_back(v);
    }
    return TwistVector(std::move(fracs));
}

TwistVector twist_from_string(const std::string& s) {
    std::vector<Rat> fracs;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        if (!tok.empty()) {
            Rat v = parse_rat(tok);
            if (v < 0 || v >= 1) throw ParseError("twist entries must lie in [0,1)");
            fracs.push_back(v);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (fracs.empty()) throw ParseError("empty twist list");
    return TwistVector(std::move(fracs));
}

Json twist_to_json(const TwistVector& t) {
    Json j = Json::array();
    for (const auto& f : t.fracs()) j.push_back(rat_str(f));
    return j;
}

LaurentPolynomial laurent_from_json(const Json& j) {
    const long p = get_long(field(j, "p"), "p");
    const long n = get_long(field(j, "n"), "n");
    if (n < 1 || n > 16) throw ParseError("variable count out of range");
    const Json& jt = field(j, "terms");
    if (!jt.is_array() || jt.empty()) throw ParseError("terms must be a nonempty array");
    std::map<std::vector<long>, long> terms;
    for (const auto& t : jt) {
        const Json& je = field(t, "exp");
        if (!je.is_array() || static_cast<long>(je.size()) != n)
            throw ParseError("term exponent has wrong arity");
        std::vector<long> e;
        for (const auto& x : je) e.push_back(get_long(x, "exponent"));
        terms[e] = get_long(field(t, "coeff"), "coeff");
    }
    try {
        return LaurentPolynomial(p, static_cast<int>(n), std::move(terms));
    } catch (const MathError& e) {
        throw ParseError(std::string("invalid Laurent polynomial: ") + e.what());
    }
}

Json laurent_to_json(const LaurentPolynomial& f) {
    Json j;
    j["p"] = f.p();
    j["n"] = f.n();
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = c;
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

Json polygon_to_json(const ConvexPolygon& p) {
    Json slopes = Json::array();
    for (const auto& [s, m] : p.runs()) slopes.push_back(Json::array({rat_str(s), m}));
    Json vertices = Json::array();
    for (const auto& [x, y] : p.vertices())
        vertices.push_back(Json::array({x, rat_str(y)}));
    Json j;
    j["slopes"] = slopes;
    j["length"] = p.length();
    j["vertices"] = vertices;
    return j;
}

ConvexPolygon polygon_from_json(const Json& j) {
    const Json& js = j.contains("slopes") ? j.at("slopes") : j;
    if (!js.is_array()) throw ParseError("polygon must carry a slope array");
    std::vector<ConvexPolygon::Run> runs;
    for (const auto& e : js) {
        if (!e.is_array() || e.size() != 2) throw ParseError("slope entry must be [\"a/b\", m]");
        runs.emplace_back(parse_rat(e[0].get<std::string>()), e[1].get<long>());
    }
    try {
        return ConvexPolygon::from_runs(std::move(runs));
    } catch (const MathError& e) {
        throw ParseError(std::string("invalid polygon: ") + e.what());
    }
}

Json poincare_to_json(const PoincarePolynomial& p) {
    Json j;
    j["D"] = p.D;
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.convert_to<long long>());
    j["coeffs"] = coeffs;
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace npoly
