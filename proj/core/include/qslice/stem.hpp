#ifndef QSLICE_STEM_HPP
#define QSLICE_STEM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qslice/polynomial.hpp"
#include "qslice/subset.hpp"

namespace qslice {

/// Polynomial-input model for slice functions: x_{v1}*...*x_{vk}*coeff
/// with nondecreasing variable indices and a right quaternion coefficient.
struct OrderedMonomial {
    std::vector<std::uint32_t> vars;  // nondecreasing, 1-based, repeats allowed
    RQuat coeff = RQuat::one();
};

/// Stem function F = sum_K e_K F_K with polynomial components, subject to
/// the parity law: F_K is even in b_h when h is not in K and odd when it
/// is. Zero components are never stored; equality ignores the difference.
class StemFunction {
public:
    explicit StemFunction(std::uint32_t arity);

    std::uint32_t arity() const { return arity_; }
    bool is_zero() const { return components_.empty(); }

    /// Component F_K (a zero polynomial of matching arity when absent).
    QPolynomial component(SubsetIndex k) const;

    void add_component(SubsetIndex k, const QPolynomial& p);

    const std::map<std::uint32_t, QPolynomial>& nonzero_components() const {
        return components_;
    }

    friend bool operator==(const StemFunction& a, const StemFunction& b) {
        return a.arity_ == b.arity_ && a.components_ == b.components_;
    }
    friend bool operator!=(const StemFunction& a, const StemFunction& b) {
        return !(a == b);
    }

    friend StemFunction operator+(const StemFunction& a, const StemFunction& b);
    friend StemFunction operator-(const StemFunction& a, const StemFunction& b);

private:
    std::uint32_t arity_;
    std::map<std::uint32_t, QPolynomial> components_;
};

struct ParityViolation {
    SubsetIndex component;
    std::uint32_t var = 0;  // the h whose b_h-parity is wrong
};

/// Empty iff every stored component is even in b_h for h outside K and
/// odd for h inside K.
std::vector<ParityViolation> validate_stem(const StemFunction& f);

inline bool is_valid_stem(const StemFunction& f) { return validate_stem(f).empty(); }

/// X_h = e_{} a_h + e_{h} b_h, the stem of the coordinate x_h.
StemFunction coordinate_stem(std::uint32_t h, std::uint32_t n);

/// Im(Z_h) = e_{h} b_h, the stem of Im(x_h).
StemFunction imaginary_coordinate_stem(std::uint32_t h, std::uint32_t n);

StemFunction const_stem(const RQuat& q, std::uint32_t n);

/// (F (x) G)_L = sum over H Delta K = L of (-1)^|H n K| F_H G_K.
StemFunction stem_tensor(const StemFunction& f, const StemFunction& g);

/// sum over terms of X_{v1} (x) ... (x) X_{vk} (x) const(coeff), folded
/// left to right. Throws NonOrderedMonomial when a term's indices
/// decrease and IndexOutOfRange when one falls outside 1..n.
StemFunction from_ordered_monomials(const std::vector<OrderedMonomial>& terms,
                                    std::uint32_t n);

/// J_h acting on a subset-indexed map of polynomials (coefficients ride
/// along unchanged).
StemFunction apply_J(std::uint32_t h, const StemFunction& f);

/// d_h F = (dF/da_h - J_h dF/db_h) / 2
StemFunction d_h(const StemFunction& f, std::uint32_t h);

/// dbar_h F = (dF/da_h + J_h dF/db_h) / 2; the kernel of all dbar_h is
/// what induces slice regular functions.
StemFunction dbar_h(const StemFunction& f, std::uint32_t h);

/// F°_H: drops every component whose index meets H.
StemFunction spherical_value_stem(const StemFunction& f, SubsetIndex h_set);

/// F'_H: component K (K inside H^c) becomes F_{K u H} / prod_{h in H} b_h,
/// divided variable by variable for precise NotDivisible diagnostics.
StemFunction spherical_derivative_stem(const StemFunction& f, SubsetIndex h_set);

inline StemFunction spherical_value_stem(const StemFunction& f, std::uint32_t h) {
    return spherical_value_stem(f, SubsetIndex::single(h));
}
inline StemFunction spherical_derivative_stem(const StemFunction& f, std::uint32_t h) {
    return spherical_derivative_stem(f, SubsetIndex::single(h));
}

}  // namespace qslice

#endif
