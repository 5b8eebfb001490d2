#ifndef QSLICE_NUMDIFF_HPP
#define QSLICE_NUMDIFF_HPP

#include <cstdint>
#include <functional>

#include "qslice/slice_function.hpp"
#include "qslice/stem.hpp"

namespace qslice {

/// Central-difference stencil parameters. Defaults follow the truncation
/// vs cancellation balance for double precision: 1e-4 for first
/// derivatives, 1e-3 for Laplacians.
struct StencilConfig {
    double step = 1e-4;
    int order = 2;  // 2 or 4
    double tolerance = 1e-5;
};

/// Deterministic black-box field on H^n (wraps evaluate() or any user
/// function).
struct BlackBoxField {
    std::uint32_t arity = 1;
    std::function<DQuat(const PointHn&)> evaluator;

    DQuat operator()(const PointHn& x) const { return evaluator(x); }
};

BlackBoxField field_of(const StemFunction& f);

/// Conjugate Cauchy-Riemann-Fueter operator in the four real coordinates
/// of x_h: (d/da + i d/db + j d/dc + k d/dd) / 2, units multiplying from
/// the left. Throws DegenerateStep when the step underflows against |x|.
DQuat crf_dbar(const BlackBoxField& f, std::uint32_t h, const PointHn& x,
               const StencilConfig& cfg);

/// (d/da - i d/db - j d/dc - k d/dd) / 2.
DQuat crf_d(const BlackBoxField& f, std::uint32_t h, const PointHn& x,
            const StencilConfig& cfg);

/// Laplacian in the four real coordinates of x_h.
DQuat laplacian_h(const BlackBoxField& f, std::uint32_t h, const PointHn& x,
                  const StencilConfig& cfg);

/// Seeded sample plan: coordinates with |x_s| <= radius, kept away from
/// the real fiber by |Im(x_s)| >= min_imag.
struct SamplePlan {
    std::uint64_t seed = 42;
    int count = 64;
    double radius = 2.0;
    double min_imag = 0.25;
};

/// Max of |Delta_h f'_{s,h}| over the plan. Requires dbar_h(F) = 0;
/// refuses (HypothesisViolated) otherwise since the statement does not
/// apply.
double verify_harmonicity(const StemFunction& f, std::uint32_t h, const SamplePlan& plan,
                          const StencilConfig& cfg = {1e-3, 2, 1e-4});

/// Max of |dbar_{x_h} f + f'_{s,h}| over the plan, the spherical
/// derivative taken through the exact stem route. Requires f slice
/// regular w.r.t. x_h.
double verify_crf_lemma(const StemFunction& f, std::uint32_t h, const SamplePlan& plan,
                        const StencilConfig& cfg = {1e-4, 2, 1e-5});

/// Max of |dbar_{x_h} (Delta_h f)| over the plan with nested stencils and
/// independent steps. Requires f slice regular w.r.t. x_h.
double verify_fueter(const StemFunction& f, std::uint32_t h, const SamplePlan& plan,
                     const StencilConfig& outer = {1e-2, 2, 1e-2},
                     const StencilConfig& inner = {1e-3, 4, 1e-2});

/// Max over the plan of the worse of |4 d(dbar f) - Delta_h f| and
/// |4 dbar(d f) - Delta_h f|, all by nested stencils. No hypothesis: the
/// factorization holds for any C^2 field.
double verify_laplacian_factorization(const StemFunction& f, std::uint32_t h,
                                      const SamplePlan& plan,
                                      const StencilConfig& outer = {1e-2, 4, 1e-3},
                                      const StencilConfig& inner = {1e-4, 2, 1e-3},
                                      const StencilConfig& laplacian = {1e-3, 2, 1e-3});

}  // namespace qslice

#endif
