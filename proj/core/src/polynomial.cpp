#include "qslice/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "qslice/errors.hpp"

namespace qslice {

namespace {

double ipow(double base, std::uint32_t e) {
    double out = 1.0;
    while (e > 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

}  // namespace

QPolynomial::QPolynomial(std::uint32_t arity) : arity_(arity) {
    check_arity_limit(arity);
}

QPolynomial QPolynomial::constant(std::uint32_t arity, const RQuat& value) {
    QPolynomial p(arity);
    p.add_term(Exponents(2 * arity, 0), value);
    return p;
}

QPolynomial QPolynomial::alpha(std::uint32_t arity, std::uint32_t h) {
    check_variable_index(h, arity);
    QPolynomial p(arity);
    Exponents e(2 * arity, 0);
    e[h - 1] = 1;
    p.add_term(e, RQuat::one());
    return p;
}

QPolynomial QPolynomial::beta(std::uint32_t arity, std::uint32_t h) {
    check_variable_index(h, arity);
    QPolynomial p(arity);
    Exponents e(2 * arity, 0);
    e[arity + h - 1] = 1;
    p.add_term(e, RQuat::one());
    return p;
}

std::uint32_t QPolynomial::total_degree() const {
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_)
        deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0u));
    return deg;
}

void QPolynomial::add_term(const Exponents& exps, const RQuat& coeff) {
    if (exps.size() != 2 * arity_)
        throw ArityMismatch("exponent vector length " + std::to_string(exps.size()) +
                            ", expected " + std::to_string(2 * arity_));
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QPolynomial QPolynomial::scale_left(const RQuat& q) const {
    QPolynomial out(arity_);
    for (const auto& [e, c] : terms_) out.add_term(e, q * c);
    return out;
}

QPolynomial QPolynomial::scale_right(const RQuat& q) const {
    QPolynomial out(arity_);
    for (const auto& [e, c] : terms_) out.add_term(e, c * q);
    return out;
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("polynomial addition across arities");
    QPolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("polynomial subtraction across arities");
    QPolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

QPolynomial operator-(const QPolynomial& a) {
    QPolynomial out(a.arity_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, -c);
    return out;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("polynomial product across arities");
    QPolynomial out(a.arity_);
    QPolynomial::Exponents e(2 * a.arity_, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t s = 0; s < e.size(); ++s) e[s] = ea[s] + eb[s];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

QPolynomial QPolynomial::d_alpha(std::uint32_t h) const {
    check_variable_index(h, arity_);
    QPolynomial out(arity_);
    for (const auto& [e, c] : terms_) {
        std::uint32_t exp = e[h - 1];
        if (exp == 0) continue;
        Exponents de = e;
        de[h - 1] -= 1;
        out.add_term(de, c * Rational(exp));
    }
    return out;
}

QPolynomial QPolynomial::d_beta(std::uint32_t h) const {
    check_variable_index(h, arity_);
    QPolynomial out(arity_);
    for (const auto& [e, c] : terms_) {
        std::uint32_t exp = e[arity_ + h - 1];
        if (exp == 0) continue;
        Exponents de = e;
        de[arity_ + h - 1] -= 1;
        out.add_term(de, c * Rational(exp));
    }
    return out;
}

QPolynomial QPolynomial::divide_beta(std::uint32_t h) const {
    check_variable_index(h, arity_);
    QPolynomial out(arity_);
    for (const auto& [e, c] : terms_) {
        if (e[arity_ + h - 1] == 0)
            throw NotDivisible("term with b" + std::to_string(h) +
                               "-exponent 0; the component is not odd in b" +
                               std::to_string(h));
        Exponents de = e;
        de[arity_ + h - 1] -= 1;
        out.add_term(de, c);
    }
    return out;
}

DQuat QPolynomial::eval(std::span<const double> point) const {
    if (point.size() != 2 * arity_)
        throw ArityMismatch("evaluation point has " + std::to_string(point.size()) +
                            " coordinates, expected " + std::to_string(2 * arity_));
    DQuat out;
    for (const auto& [e, c] : terms_) {
        double mono = 1.0;
        for (std::size_t s = 0; s < e.size(); ++s)
            if (e[s] != 0) mono *= ipow(point[s], e[s]);
        out = out + to_double(c) * mono;
    }
    return out;
}

QPolynomial::BetaParity QPolynomial::beta_parity(std::uint32_t h) const {
    check_variable_index(h, arity_);
    BetaParity p;
    for (const auto& [e, c] : terms_) {
        if (e[arity_ + h - 1] % 2 == 0)
            p.odd = false;
        else
            p.even = false;
    }
    return p;
}

std::string quaternion_literal(const RQuat& q) {
    if (q.is_zero()) return "0";
    std::string out;
    auto append = [&out](const Rational& v, const char* unit) {
        if (v == 0) return;
        Rational a = abs(v);
        std::string mag = to_string(a);
        bool bare_unit = (a == 1 && unit[0] != '\0');
        if (out.empty()) {
            if (v < 0) out += '-';
        } else {
            out += (v < 0) ? '-' : '+';
        }
        if (!bare_unit) out += mag;
        out += unit;
    };
    append(q.w, "");
    append(q.x, "i");
    append(q.y, "j");
    append(q.z, "k");
    return out;
}

namespace {

// Coefficients print as "(r)" with a trailing unit factor when the
// quaternion is a single-axis multiple, "(w+xi+yj+zk)" otherwise.
void render_coefficient(const RQuat& c, std::string& head, std::string& tail) {
    int axes = (c.w != 0) + (c.x != 0) + (c.y != 0) + (c.z != 0);
    if (axes == 1 && c.w == 0) {
        if (c.x != 0) {
            head = "(" + to_string(c.x) + ")";
            tail = "*i";
        } else if (c.y != 0) {
            head = "(" + to_string(c.y) + ")";
            tail = "*j";
        } else {
            head = "(" + to_string(c.z) + ")";
            tail = "*k";
        }
    } else {
        head = "(" + quaternion_literal(c) + ")";
        tail.clear();
    }
}

}  // namespace

std::string QPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string head, tail;
        render_coefficient(c, head, tail);
        std::string vars;
        for (std::uint32_t s = 0; s < 2 * arity_; ++s) {
            if (e[s] == 0) continue;
            vars += '*';
            vars += (s < arity_) ? 'a' : 'b';
            vars += std::to_string(s < arity_ ? s + 1 : s + 1 - arity_);
            if (e[s] > 1) vars += "^" + std::to_string(e[s]);
        }
        if (!out.empty()) out += " + ";
        out += head + vars + tail;
    }
    return out;
}

}  // namespace qslice
