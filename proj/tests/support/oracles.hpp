#ifndef QSLICE_TESTS_ORACLES_HPP
#define QSLICE_TESTS_ORACLES_HPP

// Test-only oracles, kept independent of the stem-evaluation path they
// check: ordered-monomial inputs are evaluated by direct quaternion
// products, nothing else.

#include <vector>

#include "qslice/quaternion.hpp"
#include "qslice/stem.hpp"

namespace qslice::testing {

/// sum over terms of x_{v1} * ... * x_{vk} * coeff, computed directly in H.
inline DQuat direct_eval(const std::vector<OrderedMonomial>& terms,
                         const std::vector<DQuat>& x) {
    DQuat out;
    for (const OrderedMonomial& term : terms) {
        DQuat prod = DQuat::one();
        for (std::uint32_t v : term.vars) prod = prod * x[v - 1];
        out = out + prod * to_double(term.coeff);
    }
    return out;
}

inline bool approx(const DQuat& a, const DQuat& b, double tol) {
    return norm(a - b) <= tol;
}

}  // namespace qslice::testing

#endif
