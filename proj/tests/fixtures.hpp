#pragma once

#include "rcdkit/kernel.hpp"
#include "rcdkit/measure.hpp"
#include "rcdkit/partition.hpp"

namespace fx {

using rcdkit::Kernel;
using rcdkit::Measure;
using rcdkit::Partition;
using rcdkit::Rat;

// Three states; states 1 and 2 share a row that splits evenly between them.
// Equal-row blocks: {0}, {1,2}.  A conditional distribution for exactly the
// measures giving 1 and 2 the same mass.
inline Kernel merged_tail_kernel() {
    return Kernel({{Rat(1), Rat(0), Rat(0)},
                   {Rat(0), Rat(1, 2), Rat(1, 2)},
                   {Rat(0), Rat(1, 2), Rat(1, 2)}});
}

// Four states; state 0's row abandons its own singleton block.  Idempotent
// and self-reversible, equal-row blocks {0}, {1}, {2,3}; not total whenever
// state 0 carries mass.
inline Kernel leaky_head_kernel() {
    return Kernel({{Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)},
                   {Rat(0), Rat(1), Rat(0), Rat(0)},
                   {Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)},
                   {Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)}});
}

// The measure that repairs leaky_head_kernel: no mass on the leaking state.
inline Measure leaky_head_fixpoint() {
    return Measure({Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)});
}

inline Partition merged_tail_sigma() {
    using rcdkit::EventSet;
    return Partition::from_blocks(3, {EventSet::of(3, {0}), EventSet::of(3, {1, 2})});
}

inline Partition leaky_head_sigma() {
    using rcdkit::EventSet;
    return Partition::from_blocks(
        4, {EventSet::of(4, {0}), EventSet::of(4, {1}), EventSet::of(4, {2, 3})});
}

}  // namespace fx
