#pragma once

#include <json.hpp>

#include <optional>

#include "rcdkit/kernel.hpp"
#include "rcdkit/measure.hpp"
#include "rcdkit/partition.hpp"
#include "rcdkit/rational.hpp"

namespace rcdkit {

// Structured counterexample for a failed check.  Re-evaluating the property's
// defining equation at the named states/events reproduces the violation; lhs
// and rhs record the two sides that were compared.
struct Witness {
    std::optional<int> x, y, z;
    std::optional<EventSet> A, B;
    std::optional<Rat> lhs, rhs;
};

struct PropertyVerdict {
    bool holds = false;
    std::optional<Witness> witness;      // present iff !holds
    std::optional<EventSet> certificate; // properness/totality: union of positive-mass blocks
};

// Restrict stationarity/reversibility to events measurable w.r.t. a partition.
// Empty scope means the checks quantify over all events.
struct RestrictionScope {
    std::optional<Partition> partition;
};

// nu R = nu; restricted: mass balance per block of the scope partition.
PropertyVerdict check_stationary(const Kernel& r, const Measure& nu,
                                 const RestrictionScope& scope = {}, const NumericMode& mode = {});

// Detailed balance nu(x) R(x,y) = nu(y) R(y,x); restricted: the two block-pair
// flow integrals agree for every pair of scope blocks.
PropertyVerdict check_reversible(const Kernel& r, const Measure& nu,
                                 const RestrictionScope& scope = {}, const NumericMode& mode = {});

// One kernel step is idempotent from nu-almost every start: row x of R*R
// equals row x of R for all x in support(nu).
PropertyVerdict check_self_compatible(const Kernel& r, const Measure& nu,
                                      const NumericMode& mode = {});

// R(x,y) R(y,z) = R(x,z) R(z,y) for all x in support(nu) and all y, z.
PropertyVerdict check_self_reversible(const Kernel& r, const Measure& nu,
                                      const NumericMode& mode = {});

// Rows restricted to g-measurable sets look like the identity: on every
// positive-mass block, each row is a point mass on its own block.
PropertyVerdict check_proper(const Kernel& r, const Measure& nu, const Partition& g,
                             const NumericMode& mode = {});

// Each row stays inside its own block, on every positive-mass block.
PropertyVerdict check_total(const Kernel& r, const Measure& nu, const Partition& g,
                            const NumericMode& mode = {});

// R_x(own block) is 0 or 1 for nu-almost every x.
PropertyVerdict check_trivial(const Kernel& r, const Measure& nu, const Partition& g,
                              const NumericMode& mode = {});

// Rows started from the support never leave it.
PropertyVerdict check_abs_continuous(const Kernel& r, const Measure& nu,
                                     const NumericMode& mode = {});

// All eight verdicts at once.  Unless a partition is supplied, the block-wise
// checks run against the kernel's own row partition.
struct PropertyProfile {
    Partition sigma;        // equal-row partition of the kernel
    Partition conditioning; // partition the block-wise checks used
    PropertyVerdict stationary;
    PropertyVerdict reversible;
    PropertyVerdict self_compatible;
    PropertyVerdict self_reversible;
    PropertyVerdict proper;
    PropertyVerdict total;
    PropertyVerdict trivial;
    PropertyVerdict abs_continuous;
};

PropertyProfile profile(const Kernel& r, const Measure& nu,
                        const std::optional<Partition>& g = {}, const NumericMode& mode = {});

nlohmann::ordered_json witness_to_json(const Witness& w);
nlohmann::ordered_json verdict_to_json(const PropertyVerdict& v);
nlohmann::ordered_json profile_to_json(const PropertyProfile& p);
nlohmann::ordered_json partition_to_json(const Partition& p);

}  // namespace rcdkit
