#include "qslice/stem.hpp"

#include <algorithm>

#include "qslice/errors.hpp"

namespace qslice {

StemFunction::StemFunction(std::uint32_t arity) : arity_(arity) {
    check_arity_limit(arity);
}

QPolynomial StemFunction::component(SubsetIndex k) const {
    check_subset_range(k, arity_);
    auto it = components_.find(k.bits);
    return it == components_.end() ? QPolynomial(arity_) : it->second;
}

void StemFunction::add_component(SubsetIndex k, const QPolynomial& p) {
    check_subset_range(k, arity_);
    if (p.arity() != arity_) throw ArityMismatch("component arity differs from stem arity");
    auto it = components_.find(k.bits);
    if (it == components_.end()) {
        if (!p.is_zero()) components_.emplace(k.bits, p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) components_.erase(it);
    }
}

StemFunction operator+(const StemFunction& a, const StemFunction& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("stem addition across arities");
    StemFunction out = a;
    for (const auto& [k, p] : b.components_) out.add_component(SubsetIndex(k), p);
    return out;
}

StemFunction operator-(const StemFunction& a, const StemFunction& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("stem subtraction across arities");
    StemFunction out = a;
    for (const auto& [k, p] : b.components_) out.add_component(SubsetIndex(k), -p);
    return out;
}

std::vector<ParityViolation> validate_stem(const StemFunction& f) {
    std::vector<ParityViolation> out;
    for (const auto& [kbits, p] : f.nonzero_components()) {
        SubsetIndex k(kbits);
        for (std::uint32_t h = 1; h <= f.arity(); ++h) {
            QPolynomial::BetaParity parity = p.beta_parity(h);
            bool ok = k.contains(h) ? parity.odd : parity.even;
            if (!ok) out.push_back({k, h});
        }
    }
    return out;
}

StemFunction coordinate_stem(std::uint32_t h, std::uint32_t n) {
    check_variable_index(h, n);
    StemFunction f(n);
    f.add_component(SubsetIndex::empty(), QPolynomial::alpha(n, h));
    f.add_component(SubsetIndex::single(h), QPolynomial::beta(n, h));
    return f;
}

StemFunction imaginary_coordinate_stem(std::uint32_t h, std::uint32_t n) {
    check_variable_index(h, n);
    StemFunction f(n);
    f.add_component(SubsetIndex::single(h), QPolynomial::beta(n, h));
    return f;
}

StemFunction const_stem(const RQuat& q, std::uint32_t n) {
    StemFunction f(n);
    f.add_component(SubsetIndex::empty(), QPolynomial::constant(n, q));
    return f;
}

StemFunction stem_tensor(const StemFunction& f, const StemFunction& g) {
    if (f.arity() != g.arity()) throw ArityMismatch("stem tensor product across arities");
    StemFunction out(f.arity());
    for (const auto& [h, ph] : f.nonzero_components()) {
        for (const auto& [k, pk] : g.nonzero_components()) {
            SignedSubset d = delta_basis_product(SubsetIndex(h), SubsetIndex(k));
            QPolynomial prod = ph * pk;
            out.add_component(d.index, d.sign < 0 ? -prod : prod);
        }
    }
    return out;
}

StemFunction from_ordered_monomials(const std::vector<OrderedMonomial>& terms,
                                    std::uint32_t n) {
    StemFunction out(n);
    for (const OrderedMonomial& term : terms) {
        for (std::size_t s = 0; s < term.vars.size(); ++s) {
            check_variable_index(term.vars[s], n);
            if (s > 0 && term.vars[s] < term.vars[s - 1])
                throw NonOrderedMonomial("variable indices decrease: x" +
                                         std::to_string(term.vars[s - 1]) + " then x" +
                                         std::to_string(term.vars[s]));
        }
        StemFunction acc = const_stem(RQuat::one(), n);
        for (std::uint32_t v : term.vars) acc = stem_tensor(acc, coordinate_stem(v, n));
        acc = stem_tensor(acc, const_stem(term.coeff, n));
        out = out + acc;
    }
    return out;
}

StemFunction apply_J(std::uint32_t h, const StemFunction& f) {
    check_variable_index(h, f.arity());
    StemFunction out(f.arity());
    for (const auto& [k, p] : f.nonzero_components()) {
        SignedSubset im = structure_image(h, SubsetIndex(k));
        out.add_component(im.index, im.sign < 0 ? -p : p);
    }
    return out;
}

namespace {

StemFunction cauchy_riemann(const StemFunction& f, std::uint32_t h, int beta_sign) {
    check_variable_index(h, f.arity());
    StemFunction da(f.arity());
    StemFunction db(f.arity());
    for (const auto& [k, p] : f.nonzero_components()) {
        da.add_component(SubsetIndex(k), p.d_alpha(h));
        db.add_component(SubsetIndex(k), p.d_beta(h));
    }
    StemFunction jdb = apply_J(h, db);
    StemFunction sum = (beta_sign < 0) ? (da - jdb) : (da + jdb);
    StemFunction out(f.arity());
    RQuat half = RQuat::real(rational(1, 2));
    for (const auto& [k, p] : sum.nonzero_components())
        out.add_component(SubsetIndex(k), p.scale_left(half));
    return out;
}

}  // namespace

StemFunction d_h(const StemFunction& f, std::uint32_t h) {
    return cauchy_riemann(f, h, -1);
}

StemFunction dbar_h(const StemFunction& f, std::uint32_t h) {
    return cauchy_riemann(f, h, +1);
}

StemFunction spherical_value_stem(const StemFunction& f, SubsetIndex h_set) {
    check_subset_range(h_set, f.arity());
    StemFunction out(f.arity());
    for (const auto& [k, p] : f.nonzero_components())
        if (SubsetIndex(k).intersect(h_set).is_empty())
            out.add_component(SubsetIndex(k), p);
    return out;
}

StemFunction spherical_derivative_stem(const StemFunction& f, SubsetIndex h_set) {
    check_subset_range(h_set, f.arity());
    StemFunction out(f.arity());
    for (const auto& [m, p] : f.nonzero_components()) {
        SubsetIndex mk(m);
        if (mk.intersect(h_set) != h_set) continue;
        QPolynomial q = p;
        for (std::uint32_t h : h_set.elements()) q = q.divide_beta(h);
        out.add_component(mk.sym_diff(h_set), q);
    }
    return out;
}

}  // namespace qslice
