#pragma once

#include <optional>
#include <string>

#include "rcdkit/kernel.hpp"
#include "rcdkit/measure.hpp"
#include "rcdkit/partition.hpp"
#include "rcdkit/rational.hpp"

namespace rcdkit {

enum class Mode { rational, floating };

// One analysis problem: a base measure, optionally a kernel and a partition,
// plus the numeric mode its document was written in.  Rational mode is exact;
// floating mode accepts decimal entries and compares within epsilon, and is
// meant for diagnosing externally produced matrices only.
struct Instance {
    int n = 0;
    Measure nu;
    std::optional<Kernel> kernel;
    std::optional<Partition> partition;
    Mode mode = Mode::rational;
    std::optional<Rat> epsilon;              // present iff mode == floating
    std::optional<std::string> epsilon_text; // original spelling, for round trips

    NumericMode numeric_mode() const {
        if (mode == Mode::rational) return NumericMode::exact_mode();
        return NumericMode::within(*epsilon);
    }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.n == b.n && a.nu == b.nu && a.kernel == b.kernel && a.partition == b.partition &&
               a.mode == b.mode && a.epsilon == b.epsilon;
    }
    friend bool operator!=(const Instance& a, const Instance& b) { return !(a == b); }
};

inline constexpr const char* kDefaultEpsilonText = "1e-9";

// Document format (JSON object, unknown keys rejected):
//   n          int >= 1
//   nu         array of n rationals ("p/q" strings or bare integers; decimals
//              additionally allowed in floating mode)
//   R          optional n x n array of arrays of rationals, row-stochastic
//   partition  optional array of blocks, each an array of 0-based indices
//   mode       optional "rational" (default) or "float"
//   epsilon    optional decimal string, floating mode only (default 1e-9)
Instance parse_instance(const std::string& text);

std::string serialize_instance(const Instance& inst);

}  // namespace rcdkit
