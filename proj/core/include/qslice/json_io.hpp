#ifndef QSLICE_JSON_IO_HPP
#define QSLICE_JSON_IO_HPP

#include <cstdint>
#include <string>

#include "qslice/classify.hpp"
#include "qslice/quaternion.hpp"
#include "qslice/slice_function.hpp"
#include "qslice/stem.hpp"

namespace qslice {

/// { "arity": n, "components": { "{1,3}": "<canonical polynomial>", ... } }
/// with all 2^n subsets listed (zeros render as "0").
std::string stem_to_json(const StemFunction& f, int indent = 2);

/// Accepts the dump format above; absent subsets are zero.
StemFunction stem_from_json(const std::string& text);

std::string classification_to_json(const ClassificationReport& report, int indent = 2);

struct VerificationReport {
    std::string theorem;
    std::string statement;
    std::uint32_t var = 0;  // 0 = aggregated over variables
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::uint64_t seed = 0;
};

std::string verification_to_json(const VerificationReport& report, int indent = 2);

/// { "point": [[w,x,y,z], ...], "value": [w,x,y,z] }
std::string evaluation_to_json(const PointHn& point, const DQuat& value, int indent = 2);

std::string error_to_json(const std::string& type, const std::string& message,
                          int indent = 2);

}  // namespace qslice

#endif
