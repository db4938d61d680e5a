#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "rcdkit/kernel.hpp"
#include "rcdkit/measure.hpp"
#include "rcdkit/partition.hpp"
#include "rcdkit/properties.hpp"

namespace rcdkit {

// Partitions with more than this many states are refused for exhaustive
// enumeration (the count is the Bell number; 10 states give 115975 partitions).
inline constexpr int kMaxEnumerationStates = 10;

// Equal-row partition of the kernel: the finest conditioning a kernel can
// encode, since a row function is measurable exactly when it is constant on
// blocks.  Under a tolerance mode, rows within epsilon (max norm) are
// clustered; clusters whose diameter exceeds epsilon are refused as ambiguous.
Partition sigma_of_kernel(const Kernel& r, const NumericMode& mode = {});

// Canonical conditional kernel of nu given a partition: on a positive-mass
// block every row is nu conditioned on the block.  Rows on null blocks fall
// back to the identity row (a point mass at their own state), which keeps the
// kernel proper at every point and total everywhere.
Kernel make_rcd(const Measure& nu, const Partition& g);

enum class RcdFailure { stationarity, totality, absolute_continuity };

struct RcdVerdict {
    bool is_rcd = false;
    std::optional<Partition> conditioning;     // present iff is_rcd
    std::optional<RcdFailure> failed_condition; // present iff !is_rcd
    std::optional<Witness> witness;
    std::optional<bool> abs_continuous;        // populated by the g.c.p. variant
};

// Decides whether r is a conditional distribution for nu given *some*
// partition, and recovers it.  The criterion: nu is stationary for r, and on
// every positive-mass equal-row block the rows stay inside their block.
// Stationarity is reported first when both conditions fail.
RcdVerdict is_rcd(const Kernel& r, const Measure& nu, const NumericMode& mode = {});

// Same, with the extra requirement that every row started on the support is
// absolutely continuous w.r.t. nu.
RcdVerdict is_rcd_gcp(const Kernel& r, const Measure& nu, const NumericMode& mode = {});

// One pushforward step.  When r is total w.r.t. its own row partition, r is a
// conditional distribution for the result even if it was not one for nu.
Measure stationarize(const Kernel& r, const Measure& nu);

// Streams every partition of {0,...,n-1} in restricted-growth-string order,
// from the single-block partition to the all-singletons one.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int n);
    std::optional<Partition> next();

private:
    int n_;
    std::vector<int> rgs_;
    bool done_ = false;
    bool started_ = false;
};

std::vector<Partition> all_partitions(int n);

struct OracleResult {
    std::vector<Partition> accepted;
    std::uint64_t partitions_scanned = 0;
};

// Brute-force ground truth for is_rcd: scans every partition and keeps those
// for which r has constant rows per block and satisfies the defining
// integral identity on each block.  Exact arithmetic only; shares no code
// with is_rcd, sigma_of_kernel, or the property checkers.
OracleResult oracle_is_rcd(const Kernel& r, const Measure& nu);

nlohmann::ordered_json rcd_verdict_to_json(const RcdVerdict& v);
nlohmann::ordered_json oracle_result_to_json(const OracleResult& o);

}  // namespace rcdkit
