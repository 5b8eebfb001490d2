#include "qslice/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace qslice {

DQuat random_quaternion(Rng& rng, double box) {
    return DQuat(rng.uniform(-box, box), rng.uniform(-box, box), rng.uniform(-box, box),
                 rng.uniform(-box, box));
}

DQuat random_imaginary_unit(Rng& rng) {
    while (true) {
        DQuat v(0.0, rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        double n = norm(v);
        if (n < 1e-3) continue;
        return DQuat(0.0, v.x / n, v.y / n, v.z / n);
    }
}

PointHn random_point(Rng& rng, std::uint32_t arity, double radius, double min_imag) {
    PointHn x(arity);
    for (std::uint32_t h = 0; h < arity; ++h) {
        while (true) {
            DQuat q = random_quaternion(rng, radius / 2.0);
            if (norm(imag_part(q)) >= min_imag && norm(q) <= radius) {
                x[h] = q;
                break;
            }
        }
    }
    return x;
}

PointHn random_point_box(Rng& rng, std::uint32_t arity, double box) {
    PointHn x(arity);
    for (std::uint32_t h = 0; h < arity; ++h) x[h] = random_quaternion(rng, box);
    return x;
}

RQuat random_rational_quaternion(Rng& rng) {
    auto comp = [&rng]() {
        long num = static_cast<long>(rng.integer(9)) - 4;
        long den = 1 + static_cast<long>(rng.integer(2));
        return rational(num, den);
    };
    return RQuat(comp(), comp(), comp(), comp());
}

namespace {

RQuat random_nonzero_coeff(Rng& rng) {
    while (true) {
        RQuat q = random_rational_quaternion(rng);
        if (!q.is_zero()) return q;
    }
}

OrderedMonomial random_term(Rng& rng, std::uint32_t arity, std::uint32_t max_degree) {
    OrderedMonomial term;
    std::uint32_t degree = static_cast<std::uint32_t>(rng.integer(max_degree + 1));
    for (std::uint32_t s = 0; s < degree; ++s)
        term.vars.push_back(1 + static_cast<std::uint32_t>(rng.integer(arity)));
    std::sort(term.vars.begin(), term.vars.end());
    term.coeff = random_nonzero_coeff(rng);
    return term;
}

}  // namespace

std::vector<OrderedMonomial> random_ordered_monomials(Rng& rng, std::uint32_t arity,
                                                      std::uint32_t max_terms,
                                                      std::uint32_t max_degree) {
    std::vector<OrderedMonomial> terms;
    std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.integer(max_terms));
    for (std::uint32_t t = 0; t < count; ++t)
        terms.push_back(random_term(rng, arity, max_degree));
    return terms;
}

std::vector<OrderedMonomial> random_ordered_monomials_slice_wrt(Rng& rng,
                                                                std::uint32_t arity,
                                                                std::uint32_t h,
                                                                std::uint32_t max_terms,
                                                                std::uint32_t max_degree) {
    std::vector<OrderedMonomial> terms;
    std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.integer(max_terms));
    for (std::uint32_t t = 0; t < count; ++t) {
        OrderedMonomial term = random_term(rng, arity, max_degree);
        bool uses_h = std::find(term.vars.begin(), term.vars.end(), h) != term.vars.end();
        if (uses_h) {
            // Membership in S_h requires x_h to be the least variable of
            // its term; promote smaller indices to h.
            for (std::uint32_t& v : term.vars)
                if (v < h) v = h;
            std::sort(term.vars.begin(), term.vars.end());
        }
        terms.push_back(term);
    }
    return terms;
}

StemFunction random_stem(Rng& rng, std::uint32_t arity, std::uint32_t max_terms,
                         std::uint32_t max_degree) {
    return from_ordered_monomials(random_ordered_monomials(rng, arity, max_terms, max_degree),
                                  arity);
}

StemFunction random_stem_slice_wrt(Rng& rng, std::uint32_t arity, std::uint32_t h,
                                   std::uint32_t max_terms, std::uint32_t max_degree) {
    return from_ordered_monomials(
        random_ordered_monomials_slice_wrt(rng, arity, h, max_terms, max_degree), arity);
}

StemFunction random_parity_stem(Rng& rng, std::uint32_t arity,
                                std::uint32_t max_components,
                                std::uint32_t max_terms_per_component) {
    StemFunction f(arity);
    std::uint32_t count = 1 + static_cast<std::uint32_t>(rng.integer(max_components));
    for (std::uint32_t c = 0; c < count; ++c) {
        SubsetIndex k(static_cast<std::uint32_t>(rng.integer(1u << arity)));
        QPolynomial p(arity);
        std::uint32_t nterms = 1 + static_cast<std::uint32_t>(rng.integer(max_terms_per_component));
        for (std::uint32_t t = 0; t < nterms; ++t) {
            QPolynomial::Exponents e(2 * arity, 0);
            for (std::uint32_t h = 1; h <= arity; ++h) {
                e[h - 1] = static_cast<std::uint32_t>(rng.integer(3));
                // forced b_h-parity keeps the stem valid
                std::uint32_t base = k.contains(h) ? 1 : 0;
                e[arity + h - 1] = base + 2 * static_cast<std::uint32_t>(rng.integer(2));
            }
            p.add_term(e, random_nonzero_coeff(rng));
        }
        f.add_component(k, p);
    }
    return f;
}

}  // namespace qslice
