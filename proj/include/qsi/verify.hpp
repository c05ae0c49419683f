#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsi/presentation.hpp"
#include "qsi/schofield.hpp"

namespace qsi {

struct SamplerConfig {
    std::uint64_t seed = 42;
    long entry_bound = 7;
    long trials = 40;
    long retry_limit = 10;
    long identity_bound = 1000;
    std::optional<std::uint64_t> modulus;  // prime screening, exact confirmation on misses
    long workers = 1;                      // QSI_THREADS hint
};

/// splitmix64 stream; every consumer derives its own stream from
/// (seed, tag) so parallel evaluation order cannot matter.
class Rng {
public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    std::uint64_t next();
    long uniform(long lo, long hi);  // inclusive, rejection-sampled

private:
    std::uint64_t state_;
};

Rng stream_rng(std::uint64_t seed, const std::string& tag);

/// Entries uniform in [-bound, bound] (default cfg.entry_bound),
/// deterministic from (cfg.seed, stream_tag).
Representation sample_representation(const QuiverPtr& q, const DimVec& dim,
                                     const SamplerConfig& cfg, const std::string& stream_tag,
                                     std::optional<long> bound = std::nullopt);

/// End(V) one-dimensional.
bool certify_schur(const Representation& v);

/// Resamples until certify_schur passes (at most cfg.retry_limit tries).
Representation sample_schur(const QuiverPtr& q, const DimVec& dim, const SamplerConfig& cfg,
                            const std::string& stream_tag);  // CertificationFailed

/// Certified generic model of the indecomposable regular module attached
/// to an arc (its dimension vector is the arc's edge sum).
Representation model_arc_module(const EuclideanStructure& es, const Arc& arc,
                                const SamplerConfig& cfg);  // CertificationFailed

struct RankReport {
    long estimated_dim = 0;
    long samples_used = 0;
    std::size_t mat_rows = 0;
    std::size_t mat_cols = 0;
    bool screened = false;
    std::uint64_t matrix_hash = 0;
    std::string note;
};

/// Exact rank of the evaluation matrix [c^{V_i}(W_j)] with V_i of
/// dimension alpha and W_j of dimension d: a certified lower bound for
/// dim SI(Q,d)_{<alpha,->} that is attained generically.
RankReport estimate_weight_space_dim(const EuclideanStructure& es, const DimVec& d,
                                     const DimVec& alpha, const SamplerConfig& cfg);
// throws NotOrthogonal

struct StableDim {
    long dim = 0;
    bool stable = false;
    RankReport first;
    RankReport doubled;
};

/// The stable-after-doubling rule: rank at cfg.trials and at 2x trials.
StableDim stable_weight_space_dim(const EuclideanStructure& es, const DimVec& d,
                                  const DimVec& alpha, const SamplerConfig& cfg);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
    double ms = 0;
};

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    void append(const VerificationReport& other);
};

/// dim SI(Q,d)_{m*defect} == binomial(p+m, m) for m = 1..m_max.
VerificationReport verify_binomial_law(const EuclideanStructure& es, const DimVec& d, long m_max,
                                       const SamplerConfig& cfg);

/// Arc generators: orthogonal weight, Hom-vanishing against every generic
/// summand model, nonvanishing on a generic representation; equal-label
/// non-admissible arcs must show a Hom witness exactly when an interior
/// label drops below the extremes.
VerificationReport verify_generator_conditions(const EuclideanStructure& es, const DimVec& d,
                                               const SamplerConfig& cfg);

/// The minimal-level products lie in the span of the dim-h Schofield
/// semi-invariants, the total span has rank p+1, and with three products
/// present the rank pattern matches the relation structure.
/// cv_count = 0 means the default p+3 spanning samples.
VerificationReport verify_relations_span(const EuclideanStructure& es, const DimVec& d,
                                         const SamplerConfig& cfg, long cv_count = 0);

/// Full orchestration: structure, decomposition round-trips, generator
/// conditions, binomial law (m <= 2), relation span. Failures are
/// reported, never thrown.
VerificationReport verify_presentation(const EuclideanStructure& es, const DimVec& d,
                                       const SamplerConfig& cfg);

}  // namespace qsi
