#include "rcdkit/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace rcdkit {

Partition Partition::from_blocks(int n, std::vector<EventSet> blocks) {
    if (n < 0) throw Error(Errc::dimension_mismatch, "negative state space size");
    std::vector<int> owner(static_cast<size_t>(n), -1);
    for (const EventSet& b : blocks) {
        if (b.ambient_size() != n)
            throw Error(Errc::dimension_mismatch, "block over a different state space");
        if (b.empty()) throw Error(Errc::empty_block, "partition contains an empty block");
        for (int x : b.members()) {
            if (owner[static_cast<size_t>(x)] != -1)
                throw Error(Errc::overlapping_blocks,
                            "state " + std::to_string(x) + " appears in two blocks");
            owner[static_cast<size_t>(x)] = 1;
        }
    }
    for (int x = 0; x < n; ++x)
        if (owner[static_cast<size_t>(x)] == -1)
            throw Error(Errc::uncovered_states, "state " + std::to_string(x) + " is not covered");

    std::sort(blocks.begin(), blocks.end(),
              [](const EventSet& a, const EventSet& b) { return a.min_member() < b.min_member(); });

    Partition p;
    p.n_ = n;
    p.blocks_ = std::move(blocks);
    p.index_of_.assign(static_cast<size_t>(n), -1);
    for (int i = 0; i < p.block_count(); ++i)
        for (int x : p.blocks_[static_cast<size_t>(i)].members()) p.index_of_[static_cast<size_t>(x)] = i;
    return p;
}

Partition Partition::discrete(int n) {
    std::vector<EventSet> blocks;
    blocks.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) blocks.push_back(EventSet::of(n, {x}));
    return from_blocks(n, std::move(blocks));
}

Partition Partition::trivial(int n) {
    if (n < 1) throw Error(Errc::dimension_mismatch, "state space must be nonempty");
    return from_blocks(n, {EventSet::full(n)});
}

Partition Partition::from_labels(const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size());
    std::map<int, EventSet> groups;
    for (int x = 0; x < n; ++x) {
        auto [it, fresh] = groups.try_emplace(labels[static_cast<size_t>(x)], EventSet(n));
        it->second.add(x);
        (void)fresh;
    }
    std::vector<EventSet> blocks;
    blocks.reserve(groups.size());
    for (auto& [label, b] : groups) blocks.push_back(std::move(b));
    return from_blocks(n, std::move(blocks));
}

int Partition::block_index_of(int x) const {
    if (x < 0 || x >= n_) throw Error(Errc::index_out_of_range, "state index out of range");
    return index_of_[static_cast<size_t>(x)];
}

Partition generated_by(int n, const std::vector<EventSet>& sets) {
    for (const EventSet& s : sets)
        if (s.ambient_size() != n)
            throw Error(Errc::dimension_mismatch, "generator set over a different state space");
    std::map<std::vector<bool>, std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        std::vector<bool> sig;
        sig.reserve(sets.size());
        for (const EventSet& s : sets) sig.push_back(s.contains(x));
        classes[sig].push_back(x);
    }
    std::vector<EventSet> blocks;
    blocks.reserve(classes.size());
    for (const auto& [sig, xs] : classes) blocks.push_back(EventSet::from_indices(n, xs));
    return Partition::from_blocks(n, std::move(blocks));
}

bool refines(const Partition& p, const Partition& q) {
    if (p.ambient_size() != q.ambient_size())
        throw Error(Errc::dimension_mismatch, "partitions over different state spaces");
    for (const EventSet& b : p.blocks())
        if (!b.subset_of(q.block_of(b.min_member()))) return false;
    return true;
}

Partition meet(const Partition& p, const Partition& q) {
    if (p.ambient_size() != q.ambient_size())
        throw Error(Errc::dimension_mismatch, "partitions over different state spaces");
    int n = p.ambient_size();
    std::vector<int> labels(static_cast<size_t>(n));
    std::map<std::pair<int, int>, int> ids;
    for (int x = 0; x < n; ++x) {
        std::pair<int, int> key{p.block_index_of(x), q.block_index_of(x)};
        auto [it, fresh] = ids.emplace(key, static_cast<int>(ids.size()));
        labels[static_cast<size_t>(x)] = it->second;
        (void)fresh;
    }
    return Partition::from_labels(labels);
}

namespace {

int uf_find(std::vector<int>& parent, int x) {
    while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
    }
    return x;
}

void uf_union(std::vector<int>& parent, int a, int b) {
    parent[static_cast<size_t>(uf_find(parent, a))] = uf_find(parent, b);
}

}  // namespace

Partition join(const Partition& p, const Partition& q) {
    if (p.ambient_size() != q.ambient_size())
        throw Error(Errc::dimension_mismatch, "partitions over different state spaces");
    int n = p.ambient_size();
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (const Partition* part : {&p, &q})
        for (const EventSet& b : part->blocks()) {
            auto xs = b.members();
            for (size_t i = 1; i < xs.size(); ++i) uf_union(parent, xs[0], xs[i]);
        }
    std::vector<int> labels(static_cast<size_t>(n));
    std::map<int, int> ids;
    for (int x = 0; x < n; ++x) {
        int root = uf_find(parent, x);
        auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
        labels[static_cast<size_t>(x)] = it->second;
        (void)fresh;
    }
    return Partition::from_labels(labels);
}

TracePartition trace(const Partition& p, const EventSet& carrier) {
    if (p.ambient_size() != carrier.ambient_size())
        throw Error(Errc::dimension_mismatch, "carrier over a different state space");
    TracePartition t;
    t.carrier = carrier;
    for (const EventSet& b : p.blocks()) {
        EventSet cut = b.intersect(carrier);
        if (!cut.empty()) t.blocks.push_back(cut);
    }
    std::sort(t.blocks.begin(), t.blocks.end(),
              [](const EventSet& a, const EventSet& b) { return a.min_member() < b.min_member(); });
    return t;
}

bool essentially_equal(const Partition& p, const Partition& q, const Measure& nu) {
    if (p.ambient_size() != nu.size() || q.ambient_size() != nu.size())
        throw Error(Errc::dimension_mismatch, "partition/measure size mismatch");
    EventSet supp = support(nu);
    return trace(p, supp) == trace(q, supp);
}

}  // namespace rcdkit
