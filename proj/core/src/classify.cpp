#include "qslice/classify.hpp"

#include <algorithm>

namespace qslice {

namespace {

void sort_witnesses(std::vector<Witness>& ws) {
    std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) {
        return lex_less(a.component, b.component);
    });
}

SubsetIndex smaller_variables_mask(std::uint32_t h) {
    return SubsetIndex(h == 1 ? 0u : (1u << (h - 1)) - 1u);
}

}  // namespace

CheckResult is_slice_wrt(const StemFunction& f, SubsetIndex h_set) {
    check_subset_range(h_set, f.arity());
    CheckResult res;
    for (std::uint32_t h : h_set.elements()) {
        SubsetIndex smaller = smaller_variables_mask(h);
        for (const auto& [kbits, p] : f.nonzero_components()) {
            SubsetIndex k(kbits);
            if (k.contains(h) && !k.intersect(smaller).is_empty()) {
                res.ok = false;
                res.witnesses.push_back(
                    {k, "contains " + std::to_string(h) + " together with a smaller index"});
            }
        }
    }
    sort_witnesses(res.witnesses);
    return res;
}

CheckResult is_slice_regular_wrt(const StemFunction& f, SubsetIndex h_set) {
    CheckResult res = is_slice_wrt(f, h_set);
    for (std::uint32_t h : h_set.elements()) {
        StemFunction cr = dbar_h(f, h);
        if (cr.is_zero()) continue;
        res.ok = false;
        std::vector<SubsetIndex> offenders;
        for (const auto& [kbits, p] : cr.nonzero_components())
            offenders.push_back(SubsetIndex(kbits));
        SubsetIndex least = *std::min_element(offenders.begin(), offenders.end(), lex_less);
        res.witnesses.push_back(
            {least, "dbar_" + std::to_string(h) + " has a nonzero component here"});
    }
    sort_witnesses(res.witnesses);
    return res;
}

CheckResult is_circular_wrt(const StemFunction& f, SubsetIndex h_set) {
    check_subset_range(h_set, f.arity());
    CheckResult res;
    for (const auto& [kbits, p] : f.nonzero_components()) {
        SubsetIndex k(kbits);
        if (!k.intersect(h_set).is_empty()) {
            res.ok = false;
            res.witnesses.push_back({k, "component index meets " + to_string(h_set)});
        }
    }
    sort_witnesses(res.witnesses);
    return res;
}

bool is_slice_regular(const StemFunction& f) {
    for (std::uint32_t h = 1; h <= f.arity(); ++h)
        if (!dbar_h(f, h).is_zero()) return false;
    return true;
}

ClassificationReport classify(const StemFunction& f) {
    ClassificationReport report;
    report.arity = f.arity();
    report.slice_regular = is_slice_regular(f);
    for (std::uint32_t h = 1; h <= f.arity(); ++h) {
        SubsetIndex hs = SubsetIndex::single(h);
        VariableFlags flags;
        flags.var = h;
        CheckResult slice = is_slice_wrt(f, hs);
        CheckResult regular = is_slice_regular_wrt(f, hs);
        CheckResult circular = is_circular_wrt(f, hs);
        flags.slice_wrt = slice.ok;
        flags.slice_regular_wrt = regular.ok;
        flags.circular_wrt = circular.ok;
        flags.witnesses = regular.witnesses;  // includes the slice witnesses
        for (const Witness& w : circular.witnesses) flags.witnesses.push_back(w);
        report.per_variable.push_back(std::move(flags));
    }
    return report;
}

}  // namespace qslice
