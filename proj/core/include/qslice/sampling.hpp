#ifndef QSLICE_SAMPLING_HPP
#define QSLICE_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qslice/quaternion.hpp"
#include "qslice/stem.hpp"

namespace qslice {

/// Deterministic RNG used by every sample plan. The uniform transforms
/// are spelled out here instead of <random> distributions so that a seed
/// reproduces the same plan on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    std::uint64_t integer(std::uint64_t bound) { return gen_() % bound; }  // bound > 0

private:
    std::mt19937_64 gen_;
};

using PointHn = std::vector<DQuat>;

/// Quaternion with all four components uniform in [-box, box].
DQuat random_quaternion(Rng& rng, double box);

/// Pure imaginary unit, uniform on the sphere (by normalization).
DQuat random_imaginary_unit(Rng& rng);

/// Coordinate-wise |x_h| <= radius and |Im(x_h)| >= min_imag (resampled
/// until both hold).
PointHn random_point(Rng& rng, std::uint32_t arity, double radius, double min_imag);

/// Coordinate components uniform in [-box, box]; no imaginary-part floor.
PointHn random_point_box(Rng& rng, std::uint32_t arity, double box);

/// Small exact quaternion: components p/q with p in -4..4, q in {1,2}.
RQuat random_rational_quaternion(Rng& rng);

/// 1..max_terms ordered monomials, each of degree <= max_degree, nonzero
/// random coefficients.
std::vector<OrderedMonomial> random_ordered_monomials(Rng& rng, std::uint32_t arity,
                                                      std::uint32_t max_terms,
                                                      std::uint32_t max_degree);

/// Same, but every term satisfies the structural condition for membership
/// in S_h: if x_h occurs, no smaller variable does.
std::vector<OrderedMonomial> random_ordered_monomials_slice_wrt(Rng& rng,
                                                                std::uint32_t arity,
                                                                std::uint32_t h,
                                                                std::uint32_t max_terms,
                                                                std::uint32_t max_degree);

StemFunction random_stem(Rng& rng, std::uint32_t arity, std::uint32_t max_terms,
                         std::uint32_t max_degree);

StemFunction random_stem_slice_wrt(Rng& rng, std::uint32_t arity, std::uint32_t h,
                                   std::uint32_t max_terms, std::uint32_t max_degree);

/// Valid stem built directly from parity-respecting random components;
/// generically not holomorphic in any variable (unlike ordered-monomial
/// stems, which always are).
StemFunction random_parity_stem(Rng& rng, std::uint32_t arity,
                                std::uint32_t max_components,
                                std::uint32_t max_terms_per_component);

}  // namespace qslice

#endif
