#include "qslice/slice_function.hpp"

#include <cmath>

#include "qslice/classify.hpp"
#include "qslice/errors.hpp"
#include "qslice/multivector.hpp"
#include "qslice/sampling.hpp"

namespace qslice {

DQuat evaluate_frame(const StemFunction& f, std::span<const double> alphas,
                     std::span<const double> betas, std::span<const DQuat> units) {
    const std::uint32_t n = f.arity();
    if (alphas.size() != n || betas.size() != n || units.size() != n)
        throw ArityMismatch("frame size differs from stem arity");
    std::vector<double> point(2 * n);
    for (std::uint32_t h = 0; h < n; ++h) {
        point[h] = alphas[h];
        point[n + h] = betas[h];
    }
    Multivector<double> values(n);
    for (const auto& [k, p] : f.nonzero_components())
        values.add(SubsetIndex(k), p.eval(point));
    return phi_map(units, values);
}

DQuat evaluate(const StemFunction& f, const PointHn& x) {
    const std::uint32_t n = f.arity();
    if (x.size() != n) throw ArityMismatch("point dimension differs from stem arity");
    std::vector<double> alphas(n), betas(n);
    std::vector<DQuat> units(n);
    for (std::uint32_t h = 0; h < n; ++h) {
        ImaginaryDecomposition d = decompose(x[h]);
        alphas[h] = d.alpha;
        betas[h] = d.beta;
        units[h] = d.unit;
    }
    return evaluate_frame(f, alphas, betas, units);
}

namespace {

PointHn conjugate_slot(const PointHn& x, std::uint32_t h) {
    PointHn out = x;
    out[h - 1] = conj(out[h - 1]);
    return out;
}

}  // namespace

DQuat spherical_value_pointwise(const StemFunction& f, std::uint32_t h, const PointHn& x) {
    check_variable_index(h, f.arity());
    DQuat sum = evaluate(f, x) + evaluate(f, conjugate_slot(x, h));
    return sum * 0.5;
}

DQuat spherical_derivative_pointwise(const StemFunction& f, std::uint32_t h,
                                     const PointHn& x) {
    check_variable_index(h, f.arity());
    DQuat im = imag_part(x[h - 1]);
    if (im.is_zero())
        throw RealFiber("x_" + std::to_string(h) + " lies on the real fiber");
    DQuat diff = evaluate(f, x) - evaluate(f, conjugate_slot(x, h));
    return inverse(im * 2.0) * diff;
}

namespace {

struct Frame {
    std::vector<double> alphas, betas;
    std::vector<DQuat> units;
};

Frame decompose_point(const PointHn& y) {
    Frame fr;
    fr.alphas.resize(y.size());
    fr.betas.resize(y.size());
    fr.units.resize(y.size());
    for (std::size_t s = 0; s < y.size(); ++s) {
        ImaginaryDecomposition d = decompose(y[s]);
        fr.alphas[s] = d.alpha;
        fr.betas[s] = d.beta;
        fr.units[s] = d.unit;
    }
    return fr;
}

}  // namespace

OneVarRestriction restrict_slice(const StemFunction& f, std::uint32_t h, const PointHn& y) {
    const std::uint32_t n = f.arity();
    check_variable_index(h, n);
    if (y.size() != n) throw ArityMismatch("base point dimension differs from stem arity");
    CheckResult slice = is_slice_wrt(f, SubsetIndex::single(h));
    if (!slice.ok)
        throw NotSliceInVariable("not slice w.r.t. x_" + std::to_string(h) +
                                 "; offending component " +
                                 to_string(slice.witnesses.front().component));

    Frame fr = decompose_point(y);

    // G1(w) = sum over K not containing h of J_K F_K(z', w, z'');
    // G2(w) = sum over Q in {h+1..n} of J_Q F_{{h} u Q}(z', w, z'').
    auto eval_part = [f, h, fr, n](std::complex<double> w, bool with_h) {
        std::vector<double> point(2 * n);
        for (std::uint32_t s = 0; s < n; ++s) {
            point[s] = fr.alphas[s];
            point[n + s] = fr.betas[s];
        }
        point[h - 1] = w.real();
        point[n + h - 1] = w.imag();
        Multivector<double> values(n);
        for (const auto& [kbits, p] : f.nonzero_components()) {
            SubsetIndex k(kbits);
            if (k.contains(h) != with_h) continue;
            values.add(with_h ? k.without(h) : k, p.eval(point));
        }
        return phi_map(std::span<const DQuat>(fr.units), values);
    };

    OneVarRestriction r;
    r.base = y;
    r.var = h;
    r.component1 = [eval_part](std::complex<double> w) { return eval_part(w, false); };
    r.component2 = [eval_part](std::complex<double> w) { return eval_part(w, true); };
    r.restricted = [f, h, y](const DQuat& xh) {
        PointHn p = y;
        p[h - 1] = xh;
        return evaluate(f, p);
    };
    return r;
}

OneVarRestriction restrict_raw(const StemFunction& f, std::uint32_t h, const PointHn& y) {
    const std::uint32_t n = f.arity();
    check_variable_index(h, n);
    if (y.size() != n) throw ArityMismatch("base point dimension differs from stem arity");

    DQuat j0 = decompose(y[h - 1]).unit;
    auto restricted = [f, h, y](const DQuat& xh) {
        PointHn p = y;
        p[h - 1] = xh;
        return evaluate(f, p);
    };
    auto plus = [restricted, j0](std::complex<double> w) {
        return restricted(DQuat::real(w.real()) + j0 * w.imag());
    };
    auto minus = [restricted, j0](std::complex<double> w) {
        return restricted(DQuat::real(w.real()) - j0 * w.imag());
    };

    OneVarRestriction r;
    r.base = y;
    r.var = h;
    r.component1 = [plus, minus](std::complex<double> w) {
        return (plus(w) + minus(w)) * 0.5;
    };
    // G2 = J0^{-1} (f+ - f-)/2, so that f on the J0-slice is G1 + J0 G2.
    r.component2 = [plus, minus, j0](std::complex<double> w) {
        return (-j0) * ((plus(w) - minus(w)) * 0.5);
    };
    r.restricted = restricted;
    return r;
}

double onevar_representation_check(const OneVarRestriction& r, int samples,
                                   std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        double alpha = rng.uniform(-2.0, 2.0);
        double beta = rng.uniform(0.25, 2.0);
        DQuat i_unit = random_imaginary_unit(rng);
        DQuat j_unit = random_imaginary_unit(rng);
        std::complex<double> w(alpha, beta);

        DQuat pair1 = r.component1(w);
        DQuat pair2 = r.component2(w);
        DQuat at_plus_j = pair1 + j_unit * pair2;   // pair value at alpha + J beta
        DQuat at_minus_j = pair1 - j_unit * pair2;  // ... at alpha - J beta

        DQuat rhs = (at_plus_j + at_minus_j) * 0.5 -
                    (i_unit * j_unit) * ((at_plus_j - at_minus_j) * 0.5);
        DQuat lhs = r.restricted(DQuat::real(alpha) + i_unit * beta);
        worst = std::max(worst, norm(lhs - rhs));
    }
    return worst;
}

}  // namespace qslice
