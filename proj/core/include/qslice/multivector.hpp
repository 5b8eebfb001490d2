#ifndef QSLICE_MULTIVECTOR_HPP
#define QSLICE_MULTIVECTOR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "qslice/quaternion.hpp"
#include "qslice/subset.hpp"

namespace qslice {

/// Element of H (x) R^(2^n): a sparse map from subsets of {1..n} to
/// quaternion coefficients. Absent key = zero coefficient; equality does
/// not distinguish stored zeros from omitted ones (zeros are never stored).
template <typename S>
class Multivector {
public:
    explicit Multivector(std::uint32_t arity) : arity_(arity) {
        check_arity_limit(arity);
    }

    static Multivector term(std::uint32_t arity, SubsetIndex k, Quat<S> coeff) {
        Multivector m(arity);
        m.add(k, std::move(coeff));
        return m;
    }

    std::uint32_t arity() const { return arity_; }

    Quat<S> coefficient(SubsetIndex k) const {
        auto it = coeffs_.find(k.bits);
        return it == coeffs_.end() ? Quat<S>() : it->second;
    }

    void add(SubsetIndex k, const Quat<S>& q) {
        check_subset_range(k, arity_);
        auto it = coeffs_.find(k.bits);
        if (it == coeffs_.end()) {
            if (!q.is_zero()) coeffs_.emplace(k.bits, q);
        } else {
            it->second = it->second + q;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    const std::map<std::uint32_t, Quat<S>>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

private:
    std::uint32_t arity_;
    std::map<std::uint32_t, Quat<S>> coeffs_;
};

template <typename S>
Multivector<S> operator+(const Multivector<S>& a, const Multivector<S>& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("multivector addition across arities");
    Multivector<S> out = a;
    for (const auto& [k, q] : b.coefficients()) out.add(SubsetIndex(k), q);
    return out;
}

template <typename S>
Multivector<S> operator-(const Multivector<S>& a, const Multivector<S>& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("multivector subtraction across arities");
    Multivector<S> out = a;
    for (const auto& [k, q] : b.coefficients()) out.add(SubsetIndex(k), -q);
    return out;
}

/// a (x) b = sum over (H,K) of (-1)^|H n K| e_{H Delta K} a_H b_K.
template <typename S>
Multivector<S> operator*(const Multivector<S>& a, const Multivector<S>& b) {
    if (a.arity() != b.arity()) throw ArityMismatch("multivector product across arities");
    Multivector<S> out(a.arity());
    for (const auto& [h, qa] : a.coefficients()) {
        for (const auto& [k, qb] : b.coefficients()) {
            SignedSubset d = delta_basis_product(SubsetIndex(h), SubsetIndex(k));
            Quat<S> c = qa * qb;
            out.add(d.index, d.sign < 0 ? -c : c);
        }
    }
    return out;
}

/// The complex structure J_h, linear over quaternion coefficients.
template <typename S>
Multivector<S> apply_J(std::uint32_t h, const Multivector<S>& a) {
    check_variable_index(h, a.arity());
    Multivector<S> out(a.arity());
    for (const auto& [k, q] : a.coefficients()) {
        SignedSubset im = structure_image(h, SubsetIndex(k));
        out.add(im.index, im.sign < 0 ? -q : q);
    }
    return out;
}

namespace detail {
inline void check_unit(const DQuat& j, std::size_t slot) {
    if (!is_imaginary_unit(j))
        throw NotAUnit("entry " + std::to_string(slot + 1) +
                       " is not a pure imaginary unit quaternion");
}
inline void check_unit(const RQuat& j, std::size_t slot) {
    if (!is_imaginary_unit(j))
        throw NotAUnit("entry " + std::to_string(slot + 1) +
                       " is not a pure imaginary unit quaternion");
}
}  // namespace detail

/// Phi_{J_1..J_n}: sum e_K a_K |-> sum J_{k_1}...J_{k_p} a_K, with the
/// unit product taken in ascending index order.
template <typename S>
Quat<S> phi_map(std::span<const Quat<S>> units, const Multivector<S>& a) {
    if (units.size() != a.arity())
        throw ArityMismatch("phi_map needs one unit per variable");
    for (std::size_t s = 0; s < units.size(); ++s) detail::check_unit(units[s], s);
    Quat<S> out;
    for (const auto& [k, q] : a.coefficients()) {
        Quat<S> factor = Quat<S>::one();
        for (std::uint32_t h : SubsetIndex(k).elements()) factor = factor * units[h - 1];
        out = out + factor * q;
    }
    return out;
}

}  // namespace qslice

#endif
