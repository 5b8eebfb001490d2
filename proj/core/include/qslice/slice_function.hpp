#ifndef QSLICE_SLICE_FUNCTION_HPP
#define QSLICE_SLICE_FUNCTION_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qslice/quaternion.hpp"
#include "qslice/stem.hpp"

namespace qslice {

using PointHn = std::vector<DQuat>;

/// f(x) = sum_K J_{k1}...J_{kp} F_K(z) where x_h = alpha_h + J_h beta_h
/// and z collects the (alpha, beta) pairs. Decomposition normalizes
/// beta >= 0; the parity law makes the other branch agree (tested).
DQuat evaluate(const StemFunction& f, const PointHn& x);

/// Evaluation from an explicit decomposition frame; betas may be negative
/// and units arbitrary pure imaginary units. Exposed so well-definedness
/// ((beta,J) vs (-beta,-J)) and the default-unit convention are testable.
DQuat evaluate_frame(const StemFunction& f, std::span<const double> alphas,
                     std::span<const double> betas, std::span<const DQuat> units);

/// The slice tensor product f (.) g acts on representing stems.
inline StemFunction slice_product(const StemFunction& f, const StemFunction& g) {
    return stem_tensor(f, g);
}

/// (f(x) + f(x with x_h conjugated)) / 2; equals the induced function of
/// spherical_value_stem(F, {h}) everywhere.
DQuat spherical_value_pointwise(const StemFunction& f, std::uint32_t h, const PointHn& x);

/// [2 Im(x_h)]^{-1} (f(x) - f(x with x_h conjugated)). Throws RealFiber
/// when Im(x_h) = 0. Agrees with the stem route iff f is slice w.r.t.
/// x_h; elsewhere it is a raw quotient with no structural meaning.
DQuat spherical_derivative_pointwise(const StemFunction& f, std::uint32_t h,
                                     const PointHn& x);

/// One-variable restriction data at a base point y: the stem pair
/// (component1, component2) of w = alpha + i*beta, plus the true
/// restriction x |-> f(y with slot h replaced by x).
struct OneVarRestriction {
    PointHn base;
    std::uint32_t var = 1;
    std::function<DQuat(std::complex<double>)> component1;
    std::function<DQuat(std::complex<double>)> component2;
    std::function<DQuat(const DQuat&)> restricted;
};

/// Builds the exact stem pair of the restriction from the frozen units of
/// y (slots != h). Requires f slice w.r.t. x_h; throws NotSliceInVariable
/// otherwise (the raw two-evaluation form below has no such requirement).
OneVarRestriction restrict_slice(const StemFunction& f, std::uint32_t h, const PointHn& y);

/// Raw pair built from two evaluations of f on the slice of y_h's own
/// imaginary unit. For members of S_h it reproduces restrict_slice; for
/// non-members it exists anyway and makes the failure of the
/// representation formula observable.
OneVarRestriction restrict_raw(const StemFunction& f, std::uint32_t h, const PointHn& y);

class Rng;

/// Max residual over seeded samples (alpha, beta, I, J) of the
/// one-variable representation formula: the true restriction at
/// alpha + I*beta against the reconstruction from the pair's values on
/// the J-slice. Zero (to rounding) iff the pair represents the
/// restriction as a slice function.
double onevar_representation_check(const OneVarRestriction& r, int samples,
                                   std::uint64_t seed);

}  // namespace qslice

#endif
