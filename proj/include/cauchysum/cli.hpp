#pragma once

// Command dispatch for the cauchysum tool. `run` is independent of argv
// parsing so tests can drive every subcommand in-process.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cauchysum/canary.hpp"
#include "cauchysum/cauchy.hpp"
#include "cauchysum/densela.hpp"
#include "cauchysum/minmat.hpp"
#include "cauchysum/random.hpp"
#include "cauchysum/report.hpp"
#include "cauchysum/ring.hpp"
#include "cauchysum/verify.hpp"

namespace cauchysum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;

enum class Format { json, csv, text };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw ParseError("unknown format '" + s + "'");
}

struct RunConfig {
    std::string command;
    std::string input;                 // path, "-" for stdin, or empty
    std::string inline_spec;           // JSON text; takes precedence over input
    std::optional<std::string> ring;   // "rational" | "prime:P"; overrides the spec's ring
    std::uint64_t seed = 42;
    std::size_t trials = 200;
    std::size_t max_n = 6;
    std::optional<Format> format;      // default depends on the command
    bool minus_convention = false;     // negate ys on ingestion
    bool allow_degenerate = false;
    std::string kind = "cauchy";       // for gen
    std::vector<std::size_t> sizes{3, 6, 9, 12};  // for canary without an input spec
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"gen",     "build",  "det",      "inv",     "invsum",
                                                "adjsum",  "border", "lemma-ab", "min-det", "min-invsum",
                                                "min-colsums", "verify", "canary"};
    return names;
}

namespace detail {

inline std::string read_input(const RunConfig& cfg) {
    if (!cfg.inline_spec.empty()) return cfg.inline_spec;
    if (cfg.input.empty()) throw ParseError("command '" + cfg.command + "' needs an input spec");
    if (cfg.input == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(cfg.input);
    if (!in) throw ParseError("cannot open '" + cfg.input + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline bool has_input(const RunConfig& cfg) { return !cfg.inline_spec.empty() || !cfg.input.empty(); }

inline RingChoice ring_of(const RunConfig& cfg, const SpecDocument& doc) {
    if (cfg.ring) return RingChoice::parse(*cfg.ring);
    return doc.ring.value_or(RingChoice::rational());
}

template <Ring S>
std::vector<S> ingest_ys(const RunConfig& cfg, const SpecDocument& doc, const typename S::context_type& ctx) {
    auto ys = parse_scalars<S>(doc.ys, ctx);
    if (cfg.minus_convention)
        for (auto& y : ys) y = -y;
    return ys;
}

template <Ring S>
cauchy::CauchySpec<S> cauchy_spec(const RunConfig& cfg, const SpecDocument& doc,
                                  const typename S::context_type& ctx) {
    if (doc.kind != "cauchy") throw ParseError("command '" + cfg.command + "' expects a Cauchy spec");
    return cauchy::CauchySpec<S>(parse_scalars<S>(doc.xs, ctx), ingest_ys<S>(cfg, doc, ctx), ctx);
}

inline minmat::MinSpec min_spec(const RunConfig& cfg, const SpecDocument& doc) {
    if (ring_of(cfg, doc).prime) throw OrderingError("min-matrix commands need the rational ring (fields are unordered)");
    const RationalContext ctx;
    return minmat::MinSpec(parse_scalars<Rational>(doc.xs, ctx), ingest_ys<Rational>(cfg, doc, ctx));
}

/// Calls `f(ctx, ring)` with the scalar type selected by the ring.
template <typename F>
int with_ring(const RingChoice& ring, F&& f) {
    if (ring.prime) return f(ring.field(), ring);
    return f(RationalContext{}, ring);
}

class Output {
public:
    Output(std::ostream& out, Format fmt, std::string command) : out_(out), fmt_(fmt), command_(std::move(command)) {}

    void add(VerificationReport r) { reports_.push_back(std::move(r)); }

    int flush() {
        bool ok = true;
        for (const auto& r : reports_) ok = ok && r.pass;
        switch (fmt_) {
            case Format::json: {
                json arr = json::array();
                for (const auto& r : reports_) arr.push_back(r.to_json());
                out_ << json{{"command", command_}, {"pass", ok}, {"reports", std::move(arr)}}.dump(2) << '\n';
                break;
            }
            case Format::csv:
                out_ << "identity,lhs,rhs,pass\n";
                for (const auto& r : reports_)
                    out_ << r.identity << ",\"" << r.lhs << "\",\"" << r.rhs << "\"," << (r.pass ? "true" : "false")
                         << '\n';
                break;
            case Format::text:
                for (const auto& r : reports_)
                    out_ << (r.pass ? "PASS " : "FAIL ") << r.identity << ": " << r.lhs << (r.pass ? " == " : " != ")
                         << r.rhs << '\n';
                break;
        }
        return ok ? kExitOk : kExitViolation;
    }

private:
    std::ostream& out_;
    Format fmt_;
    std::string command_;
    std::vector<VerificationReport> reports_;
};

template <Ring S>
void print_matrix(std::ostream& out, Format fmt, const Matrix<S>& m) {
    if (fmt == Format::json) {
        out << matrix_to_json(m).dump(2) << '\n';
        return;
    }
    const char sep = fmt == Format::csv ? ',' : ' ';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? std::string(1, sep) : "") << m(i, j).str();
        out << '\n';
    }
}

inline std::string render_list(const std::vector<Rational>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
    return s + "]";
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
    auto rng = random::engine_for(cfg.seed);
    const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, static_cast<long>(std::max<std::size_t>(1, cfg.max_n))));
    json spec;
    if (cfg.kind == "min") {
        if (cfg.ring && RingChoice::parse(*cfg.ring).prime)
            throw OrderingError("min-matrix specs need the rational ring");
        spec = spec_to_json(random::random_min_spec(rng, n, !cfg.allow_degenerate));
    } else if (cfg.kind == "cauchy") {
        const RingChoice ring = cfg.ring ? RingChoice::parse(*cfg.ring) : RingChoice::rational();
        const auto kind = cfg.allow_degenerate ? random::SpecKind::singular : random::SpecKind::invertible;
        with_ring(ring, [&](const auto& ctx, const RingChoice& r) {
            using S = std::decay_t<decltype(ctx.zero())>;
            spec = spec_to_json(random::random_cauchy_spec<S>(rng, n, ctx, kind), r);
            return 0;
        });
    } else {
        throw ParseError("unknown kind '" + cfg.kind + "'");
    }
    out << spec.dump(2) << '\n';
    return kExitOk;
}

inline int cmd_build(const RunConfig& cfg, const SpecDocument& doc, std::ostream& out, Format fmt) {
    if (doc.kind == "min") {
        print_matrix(out, fmt, minmat::build(min_spec(cfg, doc)));
        return kExitOk;
    }
    return with_ring(ring_of(cfg, doc), [&](const auto& ctx, const RingChoice&) {
        using S = std::decay_t<decltype(ctx.zero())>;
        print_matrix(out, fmt, cauchy::build(cauchy_spec<S>(cfg, doc, ctx)));
        return kExitOk;
    });
}

inline int cmd_cauchy(const RunConfig& cfg, const SpecDocument& doc, std::ostream& out, Format fmt) {
    return with_ring(ring_of(cfg, doc), [&](const auto& ctx, const RingChoice& ring) {
        using S = std::decay_t<decltype(ctx.zero())>;
        const auto spec = cauchy_spec<S>(cfg, doc, ctx);
        const json echo = spec_to_json(spec, ring);
        Output o(out, fmt, cfg.command);
        auto add = [&](const char* id, std::string lhs, std::string rhs) {
            o.add(VerificationReport::make(id, std::move(lhs), std::move(rhs), echo));
        };
        const std::string& c = cfg.command;
        if (c == "det") {
            add("cauchy_determinant", cauchy::det_closed(spec).str(), densela::det_fast(cauchy::build(spec)).str());
        } else if (c == "inv") {
            add("closed_form_inverse", cauchy::inverse_closed(spec).str(), densela::inverse(cauchy::build(spec)).str());
        } else if (c == "invsum") {
            const auto lhs = cauchy::inverse_entry_sum(spec);
            add("theorem1_inverse_entry_sum", lhs.str(), densela::entry_sum(densela::inverse(cauchy::build(spec))).str());
        } else if (c == "adjsum") {
            add("theorem2_adjugate_entry_sum", cauchy::adjugate_entry_sum_closed(spec).str(),
                densela::entry_sum(densela::adjugate(cauchy::build(spec))).str());
        } else if (c == "border") {
            add("theorem3_bordered_det", cauchy::bordered_det_closed(spec).str(),
                densela::det_fast(cauchy::bordered_matrix(spec)).str());
        }
        return o.flush();
    });
}

inline int cmd_min(const RunConfig& cfg, const SpecDocument& doc, std::ostream& out, Format fmt) {
    if (doc.kind != "min") throw ParseError("command '" + cfg.command + "' expects a spec with \"kind\": \"min\"");
    const auto spec = min_spec(cfg, doc);
    json echo = spec_to_json(spec);
    Output o(out, fmt, cfg.command);
    const std::string& c = cfg.command;
    if (c == "min-invsum") {
        const auto lhs = minmat::inverse_entry_sum(spec);
        o.add(VerificationReport::make("min_inverse_entry_sum", lhs.str(),
                                       densela::entry_sum(densela::inverse(minmat::build(spec))).str(), echo));
        return o.flush();
    }
    const auto sorted = minmat::normalize(spec);
    echo["normalized"] = spec_to_json(sorted.spec);
    echo["normalized"]["swapped"] = sorted.swapped;
    const auto f = minmat::build(sorted.spec);
    if (c == "min-det") {
        o.add(VerificationReport::make("min_det_closed", minmat::det_closed(sorted).str(),
                                       densela::det_fast(f).str(), echo));
    } else {
        const auto sums = minmat::inverse_column_sums(sorted);
        const auto inv = densela::inverse(f);
        for (std::size_t j = 0; j < sums.size(); ++j)
            o.add(VerificationReport::make("min_inverse_column_sum[" + std::to_string(j + 1) + "]", sums[j].str(),
                                           densela::column_sum(inv, j).str(), echo));
    }
    return o.flush();
}

inline int cmd_lemma_ab(const RunConfig& cfg, std::ostream& out, Format fmt) {
    Output o(out, fmt, cfg.command);
    if (has_input(cfg)) {
        json j;
        try {
            j = json::parse(read_input(cfg));
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("malformed JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("A") || !j.contains("B") || !j.contains("xs") || !j.contains("ys"))
            throw ParseError("lemma-ab input needs A, B, xs and ys");
        RingChoice ring = j.contains("ring") ? RingChoice::from_json(j["ring"]) : RingChoice::rational();
        if (cfg.ring) ring = RingChoice::parse(*cfg.ring);
        with_ring(ring, [&](const auto& ctx, const RingChoice&) {
            using S = std::decay_t<decltype(ctx.zero())>;
            const auto a = matrix_from_json<S>(j["A"], ctx);
            const auto b = matrix_from_json<S>(j["B"], ctx);
            const auto doc = SpecDocument::from_json(json{{"xs", j["xs"]}, {"ys", j["ys"]}});
            densela::WeightVectors<S> w{parse_scalars<S>(doc.xs, ctx), parse_scalars<S>(doc.ys, ctx)};
            const auto [lhs, rhs] = densela::lemma_ab_check(a, b, w);
            o.add(VerificationReport::make("lemma_ab", lhs.str(), rhs.str(), j));
            return 0;
        });
        return o.flush();
    }
    const RingChoice ring = cfg.ring ? RingChoice::parse(*cfg.ring) : RingChoice::rational();
    with_ring(ring, [&](const auto& ctx, const RingChoice& r) {
        using S = std::decay_t<decltype(ctx.zero())>;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            auto rng = random::engine_for(cfg.seed, 0, t);
            const auto hi = static_cast<long>(std::max<std::size_t>(1, cfg.max_n));
            const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, hi));
            const auto m = static_cast<std::size_t>(random::uniform_int(rng, 1, hi));
            const auto a = random::random_matrix<S>(rng, n, m, ctx);
            const auto b = random::random_matrix<S>(rng, m, n, ctx);
            densela::WeightVectors<S> w{random::random_vector<S>(rng, n, ctx), random::random_vector<S>(rng, m, ctx)};
            const auto [lhs, rhs] = densela::lemma_ab_check(a, b, w);
            o.add(VerificationReport::make(
                "lemma_ab", lhs.str(), rhs.str(),
                json{{"ring", r.to_json()}, {"A", matrix_to_json(a)}, {"B", matrix_to_json(b)},
                     {"xs", render_all(w.xs)}, {"ys", render_all(w.ys)}},
                cfg.seed));
        }
        return 0;
    });
    return o.flush();
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, Format fmt) {
    if (cfg.trials < 1) throw ParseError("--trials must be at least 1");
    if (cfg.max_n < 1 || cfg.max_n > densela::kCofactorSizeGuard)
        throw SizeGuardExceeded("--n must be in 1.." + std::to_string(densela::kCofactorSizeGuard) + " for verify");
    std::vector<RingChoice> rings;
    if (cfg.ring)
        rings.push_back(RingChoice::parse(*cfg.ring));
    else
        rings = {RingChoice::rational(), RingChoice::prime_field(101)};
    const auto suite = verify::run_all({cfg.seed, cfg.trials, cfg.max_n}, rings);
    switch (fmt) {
        case Format::json:
            out << verify::to_json(suite, rings).dump(2) << '\n';
            break;
        case Format::csv:
            out << "identity,ring,trials,passed,skipped\n";
            for (const auto& s : suite.results())
                out << s.identity << ',' << s.ring << ',' << s.trials << ',' << s.passed << ',' << s.skipped << '\n';
            break;
        case Format::text:
            for (const auto& s : suite.results())
                out << (s.ok() ? "PASS " : "FAIL ") << s.identity << " [" << s.ring << "] " << s.passed << "/"
                    << (s.trials - s.skipped) << " (" << s.skipped << " skipped)\n";
            break;
    }
    return suite.all_pass() ? kExitOk : kExitViolation;
}

inline int cmd_canary(const RunConfig& cfg, std::ostream& out, Format fmt) {
    std::vector<cauchy::CauchySpec<Rational>> specs;
    if (has_input(cfg)) {
        const auto doc = SpecDocument::parse(read_input(cfg));
        if (ring_of(cfg, doc).prime) throw ParseError("canary runs in floating point; use a rational spec");
        specs.push_back(cauchy_spec<Rational>(cfg, doc, RationalContext{}));
    } else {
        for (auto n : cfg.sizes) specs.push_back(canary::hilbert_spec(n));
    }
    std::vector<canary::CanaryReport> reports;
    for (const auto& s : specs) {
        const auto [closed, gauss] = canary::run_canary(s);
        reports.push_back(closed);
        reports.push_back(gauss);
    }
    if (fmt == Format::json) {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back(json{{"n", r.n},
                               {"method", canary::to_string(r.method)},
                               {"entry_sum_residual", r.entry_sum_residual},
                               {"identity_residual", r.identity_residual},
                               {"elapsed", r.elapsed}});
        out << json{{"command", "canary"}, {"norm", "max"}, {"reports", std::move(arr)}}.dump(2) << '\n';
    } else {
        out << canary::kCsvHeader << '\n';
        for (const auto& r : reports) canary::write_csv_row(out, r);
    }
    return kExitOk;
}

}  // namespace detail

/// Runs one subcommand. Exit codes: 0 all identities hold, 1 an identity was
/// violated, 2 input error (message on `err`).
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const std::string& c = cfg.command;
        if (c == "gen") return detail::cmd_gen(cfg, out);
        if (c == "verify") return detail::cmd_verify(cfg, out, cfg.format.value_or(Format::json));
        if (c == "canary") return detail::cmd_canary(cfg, out, cfg.format.value_or(Format::csv));
        if (c == "lemma-ab") return detail::cmd_lemma_ab(cfg, out, cfg.format.value_or(Format::json));

        const Format fmt = cfg.format.value_or(Format::json);
        if (c == "build" || c == "det" || c == "inv" || c == "invsum" || c == "adjsum" || c == "border" ||
            c == "min-det" || c == "min-invsum" || c == "min-colsums") {
            const auto doc = SpecDocument::parse(detail::read_input(cfg));
            if (c == "build") return detail::cmd_build(cfg, doc, out, fmt);
            if (c.rfind("min-", 0) == 0) return detail::cmd_min(cfg, doc, out, fmt);
            return detail::cmd_cauchy(cfg, doc, out, fmt);
        }
        err << "error: unknown command '" << c << "'\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace cauchysum::cli
