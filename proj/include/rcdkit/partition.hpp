#pragma once

#include <vector>

#include "rcdkit/event_set.hpp"
#include "rcdkit/measure.hpp"

namespace rcdkit {

// Partition of {0, ..., n-1} into nonempty disjoint blocks covering everything.
// On a finite space this is the same data as a sub-sigma-algebra: the blocks
// are its atoms and the measurable sets are the block unions.  Blocks are kept
// in canonical order, sorted by their smallest member.
class Partition {
public:
    Partition() : n_(0) {}

    static Partition from_blocks(int n, std::vector<EventSet> blocks);
    static Partition discrete(int n);  // all singletons
    static Partition trivial(int n);   // one block
    // Internal form: labels[x] = block id of x, ids dense from 0 by first use.
    static Partition from_labels(const std::vector<int>& labels);

    int ambient_size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<EventSet>& blocks() const { return blocks_; }
    const EventSet& block(int i) const { return blocks_[static_cast<size_t>(i)]; }

    int block_index_of(int x) const;
    const EventSet& block_of(int x) const { return blocks_[static_cast<size_t>(block_index_of(x))]; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

private:
    int n_;
    std::vector<EventSet> blocks_;
    std::vector<int> index_of_;  // state -> position in blocks_
};

// Coarsest partition making each of the given sets a block union: states are
// grouped by their membership signature across the sets.
Partition generated_by(int n, const std::vector<EventSet>& sets);

// Every block of p lies inside some block of q.
bool refines(const Partition& p, const Partition& q);

// Coarsest common refinement: nonempty pairwise block intersections.
Partition meet(const Partition& p, const Partition& q);

// Finest common coarsening: transitive closure of block overlap.
Partition join(const Partition& p, const Partition& q);

// Partition of a subset: blocks intersected with the carrier, empties dropped.
struct TracePartition {
    EventSet carrier;
    std::vector<EventSet> blocks;

    friend bool operator==(const TracePartition& a, const TracePartition& b) {
        return a.carrier == b.carrier && a.blocks == b.blocks;
    }
    friend bool operator!=(const TracePartition& a, const TracePartition& b) { return !(a == b); }
};

TracePartition trace(const Partition& p, const EventSet& carrier);

// Whether p and q agree up to nu-null sets.  On a finite space a set has full
// measure iff it contains support(nu), so "agreeing on a full-measure set" is
// the same as having equal traces on support(nu).
bool essentially_equal(const Partition& p, const Partition& q, const Measure& nu);

}  // namespace rcdkit
