#pragma once

// Seeded property suite: every identity checked on random inputs, closed form
// against oracle. Trial t of identity k draws from its own engine
// (seed, k, t), so the output depends only on the arguments.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cauchysum/cauchy.hpp"
#include "cauchysum/densela.hpp"
#include "cauchysum/minmat.hpp"
#include "cauchysum/random.hpp"
#include "cauchysum/report.hpp"
#include "cauchysum/ring.hpp"

namespace cauchysum::verify {

struct Options {
    std::uint64_t seed = 42;
    std::size_t trials = 200;
    std::size_t max_n = 6;
    std::size_t max_failures_kept = 5;
};

struct IdentitySummary {
    std::string identity;
    std::string ring;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;  // trials whose precondition did not hold
    std::vector<VerificationReport> failures;

    bool ok() const { return passed + skipped == trials; }

    json to_json() const {
        json f = json::array();
        for (const auto& r : failures) f.push_back(r.to_json());
        return json{{"identity", identity}, {"ring", ring},       {"trials", trials},
                    {"passed", passed},     {"skipped", skipped}, {"failures", std::move(f)}};
    }
};

/// Result of a trial body: a report, or nothing when the trial's
/// precondition (e.g. invertibility) does not hold.
using TrialResult = std::optional<VerificationReport>;
using TrialBody = std::function<TrialResult(random::Engine&, std::size_t trial)>;

class Suite {
public:
    explicit Suite(Options opt) : opt_(opt) {}

    void run(const std::string& identity, const RingChoice& ring, const TrialBody& body) {
        IdentitySummary s;
        s.identity = identity;
        s.ring = ring.str();
        const std::uint64_t stream = next_stream_++;
        for (std::size_t t = 0; t < opt_.trials; ++t) {
            auto rng = random::engine_for(opt_.seed, stream, t);
            ++s.trials;
            auto r = body(rng, t);
            if (!r) {
                ++s.skipped;
                continue;
            }
            if (r->pass)
                ++s.passed;
            else if (s.failures.size() < opt_.max_failures_kept)
                s.failures.push_back(std::move(*r));
        }
        results_.push_back(std::move(s));
    }

    const Options& options() const { return opt_; }
    const std::vector<IdentitySummary>& results() const { return results_; }

    bool all_pass() const {
        return std::all_of(results_.begin(), results_.end(), [](const auto& s) { return s.ok(); });
    }

    std::size_t size_for(random::Engine& rng, std::size_t cap) const {
        const auto hi = static_cast<long>(std::max<std::size_t>(1, std::min(opt_.max_n, cap)));
        return static_cast<std::size_t>(random::uniform_int(rng, 1, hi));
    }

private:
    Options opt_;
    std::uint64_t next_stream_ = 0;
    std::vector<IdentitySummary> results_;
};

template <Ring S>
void add_cauchy_identities(Suite& suite, const RingChoice& ring, const typename S::context_type& ctx) {
    using random::SpecKind;
    const std::uint64_t seed = suite.options().seed;
    auto report = [&](const char* id, std::string lhs, std::string rhs, json echo) -> TrialResult {
        return VerificationReport::make(id, std::move(lhs), std::move(rhs), std::move(echo), seed);
    };
    auto spec_for = [&](random::Engine& rng, std::size_t t, SpecKind normal) {
        const std::size_t n = suite.size_for(rng, densela::kCofactorSizeGuard);
        const SpecKind kind = t % 4 == 3 ? SpecKind::singular : normal;
        return random::random_cauchy_spec<S>(rng, n, ctx, kind);
    };

    suite.run("det_fast_vs_cofactor", ring, [&](random::Engine& rng, std::size_t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, densela::kCofactorSizeGuard);
        const auto a = random::random_matrix<S>(rng, n, n, ctx);
        return report("det_fast_vs_cofactor", densela::det_fast(a).str(), densela::det_cofactor(a).str(),
                      matrix_to_json(a));
    });

    suite.run("adjugate_product", ring, [&](random::Engine& rng, std::size_t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, densela::kCofactorSizeGuard);
        const auto a = random::random_matrix<S>(rng, n, n, ctx);
        const auto adj = densela::adjugate(a);
        const auto scaled = Matrix<S>::identity(n, ctx).scaled(densela::det_cofactor(a));
        const bool both = densela::mat_mul(adj, a) == densela::mat_mul(a, adj);
        return report("adjugate_product", both ? densela::mat_mul(a, adj).str() : "asymmetric", scaled.str(),
                      matrix_to_json(a));
    });

    suite.run("det_multiplicative", ring, [&](random::Engine& rng, std::size_t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, 5);
        const auto a = random::random_matrix<S>(rng, n, n, ctx);
        const auto b = random::random_matrix<S>(rng, n, n, ctx);
        return report("det_multiplicative", densela::det_fast(densela::mat_mul(a, b)).str(),
                      (densela::det_fast(a) * densela::det_fast(b)).str(),
                      json{{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)}});
    });

    suite.run("cauchy_determinant", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t, SpecKind::valid);
        return report("cauchy_determinant", cauchy::det_closed(spec).str(),
                      densela::det_fast(cauchy::build(spec)).str(), spec_to_json(spec, ring));
    });

    suite.run("invertibility_criterion", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t, SpecKind::valid);
        const bool verdict = cauchy::is_invertible_spec(spec).invertible;
        const bool by_det = cauchy::det_closed(spec).is_invertible();
        return report("invertibility_criterion", verdict ? "true" : "false", by_det ? "true" : "false",
                      spec_to_json(spec, ring));
    });

    suite.run("closed_form_inverse", ring, [&](random::Engine& rng, std::size_t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, densela::kCofactorSizeGuard);
        const auto spec = random::random_cauchy_spec<S>(rng, n, ctx, SpecKind::invertible);
        return report("closed_form_inverse", cauchy::inverse_closed(spec).str(),
                      densela::inverse(cauchy::build(spec)).str(), spec_to_json(spec, ring));
    });

    suite.run("theorem1_inverse_entry_sum", ring, [&](random::Engine& rng, std::size_t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, densela::kCofactorSizeGuard);
        const auto spec = random::random_cauchy_spec<S>(rng, n, ctx, SpecKind::invertible);
        return report("theorem1_inverse_entry_sum", cauchy::inverse_entry_sum(spec).str(),
                      densela::entry_sum(densela::inverse(cauchy::build(spec))).str(), spec_to_json(spec, ring));
    });

    suite.run("theorem1_closed_inverse_entry_sum", ring, [&](random::Engine& rng, std::size_t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, densela::kCofactorSizeGuard);
        const auto spec = random::random_cauchy_spec<S>(rng, n, ctx, SpecKind::invertible);
        return report("theorem1_closed_inverse_entry_sum", spec.parameter_sum().str(),
                      densela::entry_sum(cauchy::inverse_closed(spec)).str(), spec_to_json(spec, ring));
    });

    suite.run("theorem2_adjugate_entry_sum", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, densela::kCofactorSizeGuard);
        const auto spec = random::random_cauchy_spec<S>(rng, n, ctx, t % 2 ? SpecKind::singular : SpecKind::valid);
        return report("theorem2_adjugate_entry_sum", cauchy::adjugate_entry_sum_closed(spec).str(),
                      densela::entry_sum(densela::adjugate(cauchy::build(spec))).str(), spec_to_json(spec, ring));
    });

    suite.run("theorem3_bordered_det", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t, SpecKind::valid);
        return report("theorem3_bordered_det", cauchy::bordered_det_closed(spec).str(),
                      densela::det_fast(cauchy::bordered_matrix(spec)).str(), spec_to_json(spec, ring));
    });

    suite.run("border_det_general", ring, [&](random::Engine& rng, std::size_t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, 5);
        const auto a = random::random_matrix<S>(rng, n, n, ctx);
        const auto [det_b, adj_sum] = densela::border_det_general(a);
        return report("border_det_general", det_b.str(), (-adj_sum).str(), matrix_to_json(a));
    });

    suite.run("lemma_ab", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const std::size_t n = suite.size_for(rng, 6);
        std::size_t m = suite.size_for(rng, 6);
        if (t % 2 == 1 && m == n && suite.options().max_n > 1) m = n == 1 ? 2 : n - 1;
        const auto a = random::random_matrix<S>(rng, n, m, ctx);
        const auto b = random::random_matrix<S>(rng, m, n, ctx);
        densela::WeightVectors<S> w{random::random_vector<S>(rng, n, ctx), random::random_vector<S>(rng, m, ctx)};
        const auto [lhs, rhs] = densela::lemma_ab_check(a, b, w);
        return report("lemma_ab", lhs.str(), rhs.str(),
                      json{{"A", matrix_to_json(a)}, {"B", matrix_to_json(b)},
                           {"xs", render_all(w.xs)}, {"ys", render_all(w.ys)}});
    });

    suite.run("swap_symmetry", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t, SpecKind::valid);
        const auto sw = spec.swapped();
        const bool transposed = cauchy::build(sw) == cauchy::build(spec).transpose();
        return report("swap_symmetry", cauchy::det_closed(sw).str() + (transposed ? "" : " (not transposed)"),
                      cauchy::det_closed(spec).str(), spec_to_json(spec, ring));
    });
}

inline void add_min_identities(Suite& suite) {
    const std::uint64_t seed = suite.options().seed;
    const RingChoice ring = RingChoice::rational();
    auto report = [&](const char* id, std::string lhs, std::string rhs, json echo) -> TrialResult {
        return VerificationReport::make(id, std::move(lhs), std::move(rhs), std::move(echo), seed);
    };
    auto spec_for = [&](random::Engine& rng, std::size_t t) {
        return random::random_min_spec(rng, suite.size_for(rng, densela::kCofactorSizeGuard), t % 2 == 0);
    };
    auto render_vec = [](const std::vector<Rational>& v) {
        std::string s = "[";
        for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
        return s + "]";
    };

    suite.run("min_det_closed", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t);
        const auto sorted = minmat::normalize(spec);
        return report("min_det_closed", minmat::det_closed(sorted).str(),
                      densela::det_fast(minmat::build(sorted.spec)).str(), spec_to_json(spec));
    });

    suite.run("min_det_zero_predicate", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t);
        const auto sorted = minmat::normalize(spec);
        return report("min_det_zero_predicate", minmat::det_zero_predicate(sorted) ? "true" : "false",
                      densela::det_fast(minmat::build(sorted.spec)).is_zero() ? "true" : "false",
                      spec_to_json(spec));
    });

    suite.run("min_inverse_entry_sum", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t);
        const auto f = minmat::build(spec);
        if (densela::det_fast(f).is_zero()) return std::nullopt;
        return report("min_inverse_entry_sum", minmat::inverse_entry_sum(spec).str(),
                      densela::entry_sum(densela::inverse(f)).str(), spec_to_json(spec));
    });

    suite.run("min_inverse_column_sums", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto sorted = minmat::normalize(spec_for(rng, t));
        const auto f = minmat::build(sorted.spec);
        if (densela::det_fast(f).is_zero()) return std::nullopt;
        const auto inv = densela::inverse(f);
        std::vector<Rational> oracle;
        for (std::size_t j = 0; j < inv.cols(); ++j) oracle.push_back(densela::column_sum(inv, j));
        return report("min_inverse_column_sums", render_vec(minmat::inverse_column_sums(sorted)), render_vec(oracle),
                      spec_to_json(sorted.spec));
    });

    suite.run("min_invertible_nonzero_min", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t);
        if (densela::det_fast(minmat::build(spec)).is_zero()) return std::nullopt;
        return report("min_invertible_nonzero_min", spec.min_value().is_zero() ? "zero" : "nonzero", "nonzero",
                      spec_to_json(spec));
    });

    suite.run("min_normalize_abs_det", ring, [&](random::Engine& rng, std::size_t t) -> TrialResult {
        const auto spec = spec_for(rng, t);
        auto abs_det = [](const minmat::MinSpec& s) {
            const auto d = densela::det_fast(minmat::build(s));
            return d < Rational(0) ? -d : d;
        };
        return report("min_normalize_abs_det", abs_det(minmat::normalize(spec).spec).str(), abs_det(spec).str(),
                      spec_to_json(spec));
    });
}

/// Runs the Cauchy identities in each requested ring, then the min-matrix
/// identities (rationals only).
inline Suite run_all(const Options& opt, const std::vector<RingChoice>& rings) {
    Suite suite(opt);
    for (const auto& ring : rings) {
        if (ring.prime)
            add_cauchy_identities<ModP>(suite, ring, ring.field());
        else
            add_cauchy_identities<Rational>(suite, ring, RationalContext{});
    }
    add_min_identities(suite);
    return suite;
}

inline json to_json(const Suite& suite, const std::vector<RingChoice>& rings) {
    json rs = json::array();
    for (const auto& r : rings) rs.push_back(r.str());
    json ids = json::array();
    for (const auto& s : suite.results()) ids.push_back(s.to_json());
    const auto& o = suite.options();
    return json{{"command", "verify"}, {"seed", o.seed},     {"trials", o.trials},
                {"max_n", o.max_n},    {"rings", std::move(rs)}, {"pass", suite.all_pass()},
                {"identities", std::move(ids)}};
}

}  // namespace cauchysum::verify
