#include "qslice/numdiff.hpp"

#include <cmath>
#include <string>

#include "qslice/classify.hpp"
#include "qslice/errors.hpp"
#include "qslice/sampling.hpp"

namespace qslice {

namespace {

void check_config(const StencilConfig& cfg) {
    if (!(cfg.step > 0.0)) throw DegenerateStep("step must be positive");
    if (cfg.order != 2 && cfg.order != 4)
        throw Error("stencil order must be 2 or 4, got " + std::to_string(cfg.order));
}

double& coordinate(DQuat& q, int c) {
    switch (c) {
        case 0: return q.w;
        case 1: return q.x;
        case 2: return q.y;
        default: return q.z;
    }
}

void check_step(const DQuat& q, double step) {
    for (int c = 0; c < 4; ++c) {
        double v = (c == 0) ? q.w : (c == 1) ? q.x : (c == 2) ? q.y : q.z;
        if (v + step == v)
            throw DegenerateStep("step " + std::to_string(step) +
                                 " underflows against coordinate magnitude " +
                                 std::to_string(std::abs(v)));
    }
}

DQuat shifted_eval(const BlackBoxField& f, const PointHn& x, std::uint32_t h, int c,
                   double offset) {
    PointHn p = x;
    coordinate(p[h - 1], c) += offset;
    return f(p);
}

DQuat first_derivative(const BlackBoxField& f, std::uint32_t h, int c, const PointHn& x,
                       const StencilConfig& cfg) {
    const double s = cfg.step;
    if (cfg.order == 2) {
        DQuat d = shifted_eval(f, x, h, c, s) - shifted_eval(f, x, h, c, -s);
        return d * (1.0 / (2.0 * s));
    }
    DQuat d = -shifted_eval(f, x, h, c, 2 * s) + shifted_eval(f, x, h, c, s) * 8.0 -
              shifted_eval(f, x, h, c, -s) * 8.0 + shifted_eval(f, x, h, c, -2 * s);
    return d * (1.0 / (12.0 * s));
}

DQuat second_derivative(const BlackBoxField& f, std::uint32_t h, int c, const PointHn& x,
                        const StencilConfig& cfg, const DQuat& center) {
    const double s = cfg.step;
    if (cfg.order == 2) {
        DQuat d = shifted_eval(f, x, h, c, s) - center * 2.0 + shifted_eval(f, x, h, c, -s);
        return d * (1.0 / (s * s));
    }
    DQuat d = -shifted_eval(f, x, h, c, 2 * s) + shifted_eval(f, x, h, c, s) * 16.0 -
              center * 30.0 + shifted_eval(f, x, h, c, -s) * 16.0 -
              shifted_eval(f, x, h, c, -2 * s);
    return d * (1.0 / (12.0 * s * s));
}

DQuat crf(const BlackBoxField& f, std::uint32_t h, const PointHn& x,
          const StencilConfig& cfg, int unit_sign) {
    check_config(cfg);
    check_variable_index(h, f.arity);
    if (x.size() != f.arity) throw ArityMismatch("point dimension differs from field arity");
    check_step(x[h - 1], cfg.step);

    const DQuat units[3] = {DQuat::unit_i(), DQuat::unit_j(), DQuat::unit_k()};
    DQuat sum = first_derivative(f, h, 0, x, cfg);
    for (int c = 1; c < 4; ++c) {
        DQuat dc = first_derivative(f, h, c, x, cfg);
        sum = (unit_sign > 0) ? sum + units[c - 1] * dc : sum - units[c - 1] * dc;
    }
    return sum * 0.5;
}

}  // namespace

BlackBoxField field_of(const StemFunction& f) {
    return {f.arity(), [f](const PointHn& x) { return evaluate(f, x); }};
}

DQuat crf_dbar(const BlackBoxField& f, std::uint32_t h, const PointHn& x,
               const StencilConfig& cfg) {
    return crf(f, h, x, cfg, +1);
}

DQuat crf_d(const BlackBoxField& f, std::uint32_t h, const PointHn& x,
            const StencilConfig& cfg) {
    return crf(f, h, x, cfg, -1);
}

DQuat laplacian_h(const BlackBoxField& f, std::uint32_t h, const PointHn& x,
                  const StencilConfig& cfg) {
    check_config(cfg);
    check_variable_index(h, f.arity);
    if (x.size() != f.arity) throw ArityMismatch("point dimension differs from field arity");
    check_step(x[h - 1], cfg.step);

    DQuat center = f(x);
    DQuat sum;
    for (int c = 0; c < 4; ++c) sum = sum + second_derivative(f, h, c, x, cfg, center);
    return sum;
}

namespace {

double sweep(const SamplePlan& plan, std::uint32_t arity,
             const std::function<double(const PointHn&)>& residual) {
    Rng rng(plan.seed);
    double worst = 0.0;
    for (int s = 0; s < plan.count; ++s) {
        PointHn x = random_point(rng, arity, plan.radius, plan.min_imag);
        worst = std::max(worst, residual(x));
    }
    return worst;
}

void require_holomorphic(const StemFunction& f, std::uint32_t h) {
    if (!dbar_h(f, h).is_zero())
        throw HypothesisViolated("dbar_" + std::to_string(h) +
                                 "(F) != 0; the statement does not apply");
}

void require_slice_regular_wrt(const StemFunction& f, std::uint32_t h) {
    if (!is_slice_regular_wrt(f, SubsetIndex::single(h)).ok)
        throw HypothesisViolated("input is not slice regular w.r.t. x_" +
                                 std::to_string(h) + "; the statement does not apply");
}

}  // namespace

double verify_harmonicity(const StemFunction& f, std::uint32_t h, const SamplePlan& plan,
                          const StencilConfig& cfg) {
    check_variable_index(h, f.arity());
    require_holomorphic(f, h);
    BlackBoxField deriv = field_of(spherical_derivative_stem(f, h));
    return sweep(plan, f.arity(), [&](const PointHn& x) {
        return norm(laplacian_h(deriv, h, x, cfg));
    });
}

double verify_crf_lemma(const StemFunction& f, std::uint32_t h, const SamplePlan& plan,
                        const StencilConfig& cfg) {
    check_variable_index(h, f.arity());
    require_slice_regular_wrt(f, h);
    BlackBoxField field = field_of(f);
    StemFunction deriv = spherical_derivative_stem(f, h);
    return sweep(plan, f.arity(), [&](const PointHn& x) {
        return norm(crf_dbar(field, h, x, cfg) + evaluate(deriv, x));
    });
}

double verify_fueter(const StemFunction& f, std::uint32_t h, const SamplePlan& plan,
                     const StencilConfig& outer, const StencilConfig& inner) {
    check_variable_index(h, f.arity());
    require_slice_regular_wrt(f, h);
    BlackBoxField field = field_of(f);
    BlackBoxField lap{f.arity(), [field, h, inner](const PointHn& x) {
                          return laplacian_h(field, h, x, inner);
                      }};
    return sweep(plan, f.arity(), [&](const PointHn& x) {
        return norm(crf_dbar(lap, h, x, outer));
    });
}

double verify_laplacian_factorization(const StemFunction& f, std::uint32_t h,
                                      const SamplePlan& plan, const StencilConfig& outer,
                                      const StencilConfig& inner,
                                      const StencilConfig& laplacian) {
    check_variable_index(h, f.arity());
    BlackBoxField field = field_of(f);
    BlackBoxField dbar_field{f.arity(), [field, h, inner](const PointHn& x) {
                                 return crf_dbar(field, h, x, inner);
                             }};
    BlackBoxField d_field{f.arity(), [field, h, inner](const PointHn& x) {
                              return crf_d(field, h, x, inner);
                          }};
    return sweep(plan, f.arity(), [&](const PointHn& x) {
        DQuat lap = laplacian_h(field, h, x, laplacian);
        double r1 = norm(crf_d(dbar_field, h, x, outer) * 4.0 - lap);
        double r2 = norm(crf_dbar(d_field, h, x, outer) * 4.0 - lap);
        return std::max(r1, r2);
    });
}

}  // namespace qslice
