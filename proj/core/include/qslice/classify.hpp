#ifndef QSLICE_CLASSIFY_HPP
#define QSLICE_CLASSIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qslice/stem.hpp"
#include "qslice/subset.hpp"

namespace qslice {

struct Witness {
    SubsetIndex component;
    std::string reason;
};

/// Outcome of one structural membership test. Witnesses are sorted by the
/// lexicographic order on element sequences, least first, so reports are
/// deterministic.
struct CheckResult {
    bool ok = true;
    std::vector<Witness> witnesses;
    explicit operator bool() const { return ok; }
};

/// Membership in S_H: no nonzero component may contain some h in H
/// together with a smaller variable.
CheckResult is_slice_wrt(const StemFunction& f, SubsetIndex h_set);

/// Membership in SR_H = S_H intersected with the kernel of every dbar_h,
/// h in H.
CheckResult is_slice_regular_wrt(const StemFunction& f, SubsetIndex h_set);

/// Membership in S_{c,H}: every component meeting H must vanish.
CheckResult is_circular_wrt(const StemFunction& f, SubsetIndex h_set);

/// dbar_h(F) = 0 for every h (the induced slice function is slice regular).
bool is_slice_regular(const StemFunction& f);

struct VariableFlags {
    std::uint32_t var = 1;
    bool slice_wrt = true;
    bool slice_regular_wrt = true;
    bool circular_wrt = true;
    std::vector<Witness> witnesses;
};

struct ClassificationReport {
    std::uint32_t arity = 1;
    bool slice_regular = true;
    std::vector<VariableFlags> per_variable;
};

ClassificationReport classify(const StemFunction& f);

}  // namespace qslice

#endif
