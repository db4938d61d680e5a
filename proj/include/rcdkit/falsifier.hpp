#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcdkit/instance.hpp"
#include "rcdkit/kernel.hpp"
#include "rcdkit/measure.hpp"
#include "rcdkit/partition.hpp"
#include "rcdkit/properties.hpp"
#include "rcdkit/rng.hpp"

namespace rcdkit {

// Seeded generators.  Same arguments, same output, always.

// Integer weights 1..8 per state, zeroed with probability 1/4 when zeros are
// allowed (at least one stays positive), normalized exactly.
Measure gen_measure(int n, std::uint64_t seed, bool allow_zeros);

// Independent random rows, same recipe as gen_measure per row.
Kernel gen_kernel_dense(int n, std::uint64_t seed);

// Rows constant on each block of g and supported inside their own block.
Kernel gen_kernel_block(const Partition& g, std::uint64_t seed);

// The canonical conditional kernel with one positive-block row nudged: a
// random amount of mass moves between two coordinates of that row.
Kernel gen_kernel_near_rcd(const Measure& nu, const Partition& g, std::uint64_t seed);

// Uniform over all partitions of n states, by counting restricted-growth
// suffixes.  n is capped at 25, where the counts still fit in 64 bits.
Partition gen_partition(int n, std::uint64_t seed);

// One generated problem a law is evaluated on.  Laws about synthesis carry a
// partition; one law compares two partitions and carries both.
struct LawTrial {
    Measure nu;
    Kernel kernel;
    std::optional<Partition> partition;
    std::optional<Partition> aux_partition;
};

struct Counterexample {
    LawTrial trial;
    std::optional<Witness> witness;
};

struct Law {
    std::string id;
    std::string statement;       // what the law asserts, in plain language
    std::string generator_hint;  // dominant instance family the trials draw from
    bool expected_to_fail = false;
    int max_n = 1 << 20;         // laws that scan all partitions clamp n
    std::function<LawTrial(int n, SplitMix64& rng)> generate;
    std::function<bool(const LawTrial&)> premise;
    // Returns whether the conclusion holds; fills the witness when it does not.
    std::function<bool(const LawTrial&, Witness&)> conclusion;
    std::optional<LawTrial> fixture;  // injected as trial 0 when its size fits n_range
};

const std::vector<Law>& law_registry();
const Law& find_law(const std::string& id);  // throws on unknown ids

struct LawReport {
    std::string law;
    int trials = 0;
    int premise_hits = 0;
    std::vector<Counterexample> counterexamples;
    std::uint64_t seed = 0;
    std::pair<int, int> n_range{2, 5};
    std::string generator_version;
    double elapsed_seconds = 0;  // informational; never serialized
};

// Runs `trials` independent trials of a law.  Trial i draws everything from
// stream_seed(seed, i), so reports are reproducible bit for bit.  Exact
// arithmetic only: a tolerance mode is refused.
LawReport run_law(const std::string& id, int trials, std::uint64_t seed,
                  std::pair<int, int> n_range, Mode mode = Mode::rational);

// Greedy minimization: repeatedly delete a state and renormalize, keeping the
// violation alive.  States that receive full mass from some other state stay
// (deleting them would zero out a row).  Fixpoints are idempotent.
Counterexample shrink(const Counterexample& ce, const std::string& law_id);

nlohmann::ordered_json trial_to_json(const LawTrial& t);
nlohmann::ordered_json counterexample_to_json(const Counterexample& c);
nlohmann::ordered_json law_report_to_json(const LawReport& r);

}  // namespace rcdkit
