#include "rcdkit/rcd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace rcdkit {

namespace {

Rat row_distance(const Kernel& r, int i, int j) {
    Rat worst(0);
    for (int z = 0; z < r.size(); ++z) {
        Rat d = (r.entry(i, z) - r.entry(j, z)).abs();
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace

Partition sigma_of_kernel(const Kernel& r, const NumericMode& mode) {
    int n = r.size();
    if (n < 1) throw Error(Errc::dimension_mismatch, "kernel over an empty state space");

    if (mode.exact) {
        std::map<std::vector<Rat>, std::vector<int>> classes;
        for (int x = 0; x < n; ++x) classes[r.row(x)].push_back(x);
        std::vector<EventSet> blocks;
        blocks.reserve(classes.size());
        for (const auto& [row, xs] : classes) blocks.push_back(EventSet::from_indices(n, xs));
        return Partition::from_blocks(n, std::move(blocks));
    }

    // Cluster rows within epsilon, then insist every cluster has diameter
    // within epsilon too; otherwise near-ties chain into a group with no
    // consistent reading and the atoms are ambiguous.
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (row_distance(r, i, j) <= mode.epsilon) parent[static_cast<size_t>(find(i))] = find(j);
    std::vector<int> labels(static_cast<size_t>(n));
    std::map<int, int> ids;
    for (int x = 0; x < n; ++x) {
        auto [it, fresh] = ids.emplace(find(x), static_cast<int>(ids.size()));
        labels[static_cast<size_t>(x)] = it->second;
        (void)fresh;
    }
    Partition p = Partition::from_labels(labels);
    for (const EventSet& b : p.blocks()) {
        auto xs = b.members();
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = i + 1; j < xs.size(); ++j)
                if (row_distance(r, xs[i], xs[j]) > mode.epsilon)
                    throw Error(Errc::ambiguous_atoms,
                                "rows " + std::to_string(xs[i]) + " and " + std::to_string(xs[j]) +
                                    " chain together through epsilon but differ by more than epsilon");
    }
    return p;
}

Kernel make_rcd(const Measure& nu, const Partition& g) {
    if (g.ambient_size() != nu.size())
        throw Error(Errc::dimension_mismatch, "partition/measure size mismatch");
    int n = nu.size();
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(n));
    for (const EventSet& b : g.blocks()) {
        Rat mass = measure_of_set(nu, b);
        if (mass.is_zero()) {
            for (int x : b.members()) rows[static_cast<size_t>(x)] = point_mass(x, n).weights();
        } else {
            std::vector<Rat> row = conditional_measure(nu, b).weights();
            for (int x : b.members()) rows[static_cast<size_t>(x)] = row;
        }
    }
    return Kernel::unchecked(std::move(rows));
}

RcdVerdict is_rcd(const Kernel& r, const Measure& nu, const NumericMode& mode) {
    RcdVerdict v;
    Partition sigma = sigma_of_kernel(r, mode);
    PropertyVerdict s = check_stationary(r, nu, {}, mode);
    if (!s.holds) {
        v.is_rcd = false;
        v.failed_condition = RcdFailure::stationarity;
        v.witness = s.witness;
        return v;
    }
    PropertyVerdict t = check_total(r, nu, sigma, mode);
    if (!t.holds) {
        v.is_rcd = false;
        v.failed_condition = RcdFailure::totality;
        v.witness = t.witness;
        return v;
    }
    v.is_rcd = true;
    v.conditioning = std::move(sigma);
    return v;
}

RcdVerdict is_rcd_gcp(const Kernel& r, const Measure& nu, const NumericMode& mode) {
    RcdVerdict v = is_rcd(r, nu, mode);
    PropertyVerdict ac = check_abs_continuous(r, nu, mode);
    v.abs_continuous = ac.holds;
    if (v.is_rcd && !ac.holds) {
        v.is_rcd = false;
        v.conditioning.reset();
        v.failed_condition = RcdFailure::absolute_continuity;
        v.witness = ac.witness;
    }
    return v;
}

Measure stationarize(const Kernel& r, const Measure& nu) { return propagate(nu, r); }

PartitionEnumerator::PartitionEnumerator(int n) : n_(n) {
    if (n < 1) throw Error(Errc::dimension_mismatch, "state space must be nonempty");
    if (n > kMaxEnumerationStates)
        throw Error(Errc::too_large, "refusing to enumerate partitions of " + std::to_string(n) +
                                         " states (limit " + std::to_string(kMaxEnumerationStates) + ")");
    rgs_.assign(static_cast<size_t>(n), 0);
}

std::optional<Partition> PartitionEnumerator::next() {
    if (done_) return std::nullopt;
    if (started_) {
        // Successor in restricted-growth order: bump the rightmost position
        // that can grow, reset everything after it.
        int i = n_ - 1;
        for (; i >= 1; --i) {
            int prefix_max = 0;
            for (int k = 0; k < i; ++k) prefix_max = std::max(prefix_max, rgs_[static_cast<size_t>(k)]);
            if (rgs_[static_cast<size_t>(i)] <= prefix_max) {
                ++rgs_[static_cast<size_t>(i)];
                for (int k = i + 1; k < n_; ++k) rgs_[static_cast<size_t>(k)] = 0;
                break;
            }
        }
        if (i == 0) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    return Partition::from_labels(rgs_);
}

std::vector<Partition> all_partitions(int n) {
    PartitionEnumerator e(n);
    std::vector<Partition> out;
    while (auto p = e.next()) out.push_back(std::move(*p));
    return out;
}

OracleResult oracle_is_rcd(const Kernel& r, const Measure& nu) {
    if (r.size() != nu.size()) throw Error(Errc::dimension_mismatch, "measure/kernel size mismatch");
    int n = r.size();
    if (n > kMaxEnumerationStates)
        throw Error(Errc::too_large, "oracle refuses state spaces larger than " +
                                         std::to_string(kMaxEnumerationStates));

    OracleResult result;
    PartitionEnumerator enumerator(n);
    while (auto g = enumerator.next()) {
        ++result.partitions_scanned;
        bool ok = true;

        // Rows must be constant on every block, at every state.
        for (const EventSet& b : g->blocks()) {
            auto xs = b.members();
            for (size_t i = 1; i < xs.size() && ok; ++i)
                for (int z = 0; z < n; ++z)
                    if (r.entry(xs[i], z) != r.entry(xs[0], z)) {
                        ok = false;
                        break;
                    }
            if (!ok) break;
        }

        // Defining identity: integrating the row mass of {y} over a block
        // against nu must give nu(block intersected with {y}).
        if (ok) {
            for (const EventSet& a : g->blocks()) {
                for (int y = 0; y < n && ok; ++y) {
                    Rat integral(0);
                    for (int x : a.members()) integral += nu[x] * r.entry(x, y);
                    Rat target = a.contains(y) ? nu[y] : Rat(0);
                    if (integral != target) ok = false;
                }
                if (!ok) break;
            }
        }

        if (ok) result.accepted.push_back(std::move(*g));
    }
    return result;
}

namespace {

const char* failure_name(RcdFailure f) {
    switch (f) {
        case RcdFailure::stationarity: return "stationarity";
        case RcdFailure::totality: return "totality";
        case RcdFailure::absolute_continuity: return "absolute_continuity";
    }
    return "?";
}

}  // namespace

nlohmann::ordered_json rcd_verdict_to_json(const RcdVerdict& v) {
    nlohmann::ordered_json j;
    j["is_rcd"] = v.is_rcd;
    if (v.conditioning) j["conditioning"] = partition_to_json(*v.conditioning);
    if (v.failed_condition) j["failed_condition"] = failure_name(*v.failed_condition);
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    if (v.abs_continuous) j["abs_continuous"] = *v.abs_continuous;
    return j;
}

nlohmann::ordered_json oracle_result_to_json(const OracleResult& o) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json acc = nlohmann::ordered_json::array();
    for (const Partition& p : o.accepted) acc.push_back(partition_to_json(p));
    j["accepted"] = acc;
    j["partitions_scanned"] = o.partitions_scanned;
    return j;
}

}  // namespace rcdkit
