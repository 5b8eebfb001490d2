#ifndef QSLICE_POLYNOMIAL_HPP
#define QSLICE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qslice/quaternion.hpp"
#include "qslice/subset.hpp"

namespace qslice {

/// Exact polynomial in the 2n central real variables a_1..a_n, b_1..b_n
/// with quaternion coefficients. Variables commute with everything;
/// coefficients multiply in H and sit on the left of the monomial
/// (a pure bookkeeping choice, see the format notes in the README).
///
/// Terms live in a map keyed by the exponent vector (alphas first, then
/// betas), so iteration order — and therefore printing — is the
/// lexicographic canonical order.
class QPolynomial {
public:
    using Exponents = std::vector<std::uint32_t>;

    explicit QPolynomial(std::uint32_t arity);

    static QPolynomial constant(std::uint32_t arity, const RQuat& value);
    static QPolynomial alpha(std::uint32_t arity, std::uint32_t h);
    static QPolynomial beta(std::uint32_t arity, std::uint32_t h);

    std::uint32_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, RQuat>& terms() const { return terms_; }
    std::uint32_t total_degree() const;

    /// Adds coeff * monomial(exps), normalizing away zero results.
    void add_term(const Exponents& exps, const RQuat& coeff);

    QPolynomial scale_left(const RQuat& q) const;   // q * p
    QPolynomial scale_right(const RQuat& q) const;  // p * q

    QPolynomial d_alpha(std::uint32_t h) const;
    QPolynomial d_beta(std::uint32_t h) const;

    /// Exact quotient p / b_h; every term must carry b_h. A term without
    /// it means the caller passed a component with the wrong b_h-parity,
    /// reported as NotDivisible.
    QPolynomial divide_beta(std::uint32_t h) const;

    /// Substitution homomorphism into the double flavor. point holds the
    /// 2n values (alphas first, then betas).
    DQuat eval(std::span<const double> point) const;

    struct BetaParity {
        bool even = true;
        bool odd = true;  // the zero polynomial is both
    };
    BetaParity beta_parity(std::uint32_t h) const;

    /// Canonical rendering, e.g. "(2)*a3*b2*b3*k"; "0" for the zero
    /// polynomial.
    std::string to_string() const;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

    friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator-(const QPolynomial& a);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

private:
    std::uint32_t arity_;
    std::map<Exponents, RQuat> terms_;
};

/// Renders one quaternion as a literal like "1+2i-3/4k" ("0" when zero).
std::string quaternion_literal(const RQuat& q);

}  // namespace qslice

#endif
