#pragma once

// JSON interchange: ring selection, spec documents, matrices and verification
// reports.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cauchysum/cauchy.hpp"
#include "cauchysum/errors.hpp"
#include "cauchysum/matrix.hpp"
#include "cauchysum/minmat.hpp"
#include "cauchysum/ring.hpp"

namespace cauchysum {

using json = nlohmann::ordered_json;

/// Which ring a computation runs in: the rationals, or F_p.
struct RingChoice {
    bool prime = false;
    std::uint64_t p = 0;

    static RingChoice rational() { return {}; }
    static RingChoice prime_field(std::uint64_t p) { return {true, PrimeFieldContext::make(p).p}; }

    /// "rational" or "prime:P".
    static RingChoice parse(const std::string& text) {
        if (text == "rational") return rational();
        if (text.rfind("prime:", 0) == 0) {
            const auto digits = text.substr(6);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("invalid ring '" + text + "'");
            return prime_field(std::stoull(digits));
        }
        throw ParseError("invalid ring '" + text + "' (expected rational or prime:P)");
    }

    /// Accepts "rational", "prime:P" or {"prime": P}.
    static RingChoice from_json(const json& j) {
        if (j.is_string()) return parse(j.get<std::string>());
        if (j.is_object() && j.contains("prime") && j["prime"].is_number_unsigned())
            return prime_field(j["prime"].get<std::uint64_t>());
        throw ParseError("invalid ring field: " + j.dump());
    }

    json to_json() const {
        if (!prime) return "rational";
        return json{{"prime", p}};
    }

    std::string str() const { return prime ? "prime:" + std::to_string(p) : "rational"; }
    PrimeFieldContext field() const { return PrimeFieldContext{p}; }
    bool operator==(const RingChoice&) const = default;
};

/// A parsed spec file: {"ring": ..., "kind": "cauchy"|"min", "xs": [...], "ys": [...]}.
/// Scalars stay textual until the ring is known.
struct SpecDocument {
    std::optional<RingChoice> ring;
    std::string kind = "cauchy";
    std::vector<std::string> xs;
    std::vector<std::string> ys;

    static SpecDocument from_json(const json& j) {
        if (!j.is_object()) throw ParseError("spec must be a JSON object");
        SpecDocument d;
        if (j.contains("ring")) d.ring = RingChoice::from_json(j["ring"]);
        if (j.contains("kind")) {
            if (!j["kind"].is_string()) throw ParseError("\"kind\" must be a string");
            d.kind = j["kind"].get<std::string>();
            if (d.kind != "cauchy" && d.kind != "min") throw ParseError("unknown kind '" + d.kind + "'");
        }
        d.xs = scalar_list(j, "xs");
        d.ys = scalar_list(j, "ys");
        return d;
    }

    static SpecDocument parse(const std::string& text) {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what());
        }
        return from_json(j);
    }

    json to_json() const {
        json j;
        if (ring) j["ring"] = ring->to_json();
        if (kind != "cauchy") j["kind"] = kind;
        j["xs"] = xs;
        j["ys"] = ys;
        return j;
    }

private:
    static std::vector<std::string> scalar_list(const json& j, const char* key) {
        if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array \"") + key + "\"");
        std::vector<std::string> out;
        for (const auto& e : j[key]) {
            if (e.is_string())
                out.push_back(e.get<std::string>());
            else if (e.is_number_integer())
                out.push_back(e.dump());
            else
                throw ParseError(std::string("entries of \"") + key + "\" must be strings or integers");
        }
        return out;
    }
};

template <Ring S>
std::vector<S> parse_scalars(const std::vector<std::string>& texts, const typename S::context_type& ctx) {
    std::vector<S> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(ctx.parse(t));
    return out;
}

template <Ring S>
std::vector<std::string> render_all(const std::vector<S>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(s.str());
    return out;
}

template <Ring S>
json spec_to_json(const cauchy::CauchySpec<S>& spec, const RingChoice& ring) {
    return json{{"ring", ring.to_json()}, {"xs", render_all(spec.xs())}, {"ys", render_all(spec.ys())}};
}

inline json spec_to_json(const minmat::MinSpec& spec) {
    return json{{"ring", "rational"}, {"kind", "min"}, {"xs", render_all(spec.xs)}, {"ys", render_all(spec.ys)}};
}

template <Ring S>
json matrix_to_json(const Matrix<S>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (const auto& e : m.row(i)) row.push_back(e.str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

/// {"rows": n, "cols": m, "entries": [["1/2", ...], ...]}
template <Ring S>
Matrix<S> matrix_from_json(const json& j, const typename S::context_type& ctx) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix must have rows, cols and entries");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("matrix rows/cols must be non-negative integers");
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    const auto& e = j["entries"];
    if (!e.is_array() || e.size() != rows) throw ShapeError("matrix entries do not have " + std::to_string(rows) + " rows");
    std::vector<S> flat;
    for (const auto& row : e) {
        if (!row.is_array() || row.size() != cols)
            throw ShapeError("matrix row does not have " + std::to_string(cols) + " entries");
        for (const auto& v : row) {
            if (v.is_string())
                flat.push_back(ctx.parse(v.get<std::string>()));
            else if (v.is_number_integer())
                flat.push_back(ctx.parse(v.dump()));
            else
                throw ParseError("matrix entries must be strings or integers");
        }
    }
    return Matrix<S>(rows, cols, std::move(flat), ctx);
}

/// One checked identity: closed form on the left, oracle on the right, both
/// as canonical renderings. `pass` is exactly `lhs == rhs`.
struct VerificationReport {
    std::string identity;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    json spec_echo;
    std::optional<std::uint64_t> seed;

    static VerificationReport make(std::string identity, std::string lhs, std::string rhs, json spec_echo,
                                   std::optional<std::uint64_t> seed = std::nullopt) {
        VerificationReport r{std::move(identity), std::move(lhs), std::move(rhs), false, std::move(spec_echo), seed};
        r.pass = r.lhs == r.rhs;
        return r;
    }

    json to_json() const {
        json j{{"identity", identity}, {"lhs", lhs}, {"rhs", rhs}, {"pass", pass}, {"spec", spec_echo}};
        if (seed) j["seed"] = *seed;
        return j;
    }
};

}  // namespace cauchysum
