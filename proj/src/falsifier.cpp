#include "rcdkit/falsifier.hpp"

#include "rcdkit/rcd.hpp"

#include <chrono>
#include <map>
#include <utility>

namespace rcdkit {

Measure gen_measure(int n, std::uint64_t seed, bool allow_zeros) {
    if (n < 1) throw Error(Errc::dimension_mismatch, "state space must be nonempty");
    SplitMix64 rng(seed);
    std::vector<long long> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        long long v = 1 + static_cast<long long>(rng.below(8));
        if (allow_zeros && rng.below(4) == 0) v = 0;
        w[static_cast<size_t>(i)] = v;
    }
    long long total = 0;
    for (long long v : w) total += v;
    if (total == 0) {
        w[rng.below(static_cast<std::uint64_t>(n))] = 1 + static_cast<long long>(rng.below(8));
        total = 0;
        for (long long v : w) total += v;
    }
    std::vector<Rat> weights;
    weights.reserve(static_cast<size_t>(n));
    for (long long v : w) weights.emplace_back(BigInt(v), BigInt(total));
    return Measure(std::move(weights));
}

namespace {

// A random distribution over the listed sites, as a full-length row.
std::vector<Rat> random_row(SplitMix64& rng, int n, const std::vector<int>& sites) {
    std::vector<long long> w(sites.size());
    for (size_t i = 0; i < sites.size(); ++i) {
        long long v = 1 + static_cast<long long>(rng.below(8));
        if (rng.below(4) == 0) v = 0;
        w[i] = v;
    }
    long long total = 0;
    for (long long v : w) total += v;
    if (total == 0) {
        w[rng.below(w.size())] = 1 + static_cast<long long>(rng.below(8));
        total = 0;
        for (long long v : w) total += v;
    }
    std::vector<Rat> row(static_cast<size_t>(n), Rat(0));
    for (size_t i = 0; i < sites.size(); ++i)
        row[static_cast<size_t>(sites[i])] = Rat(BigInt(w[i]), BigInt(total));
    return row;
}

std::vector<int> all_sites(int n) {
    std::vector<int> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = i;
    return out;
}

}  // namespace

Kernel gen_kernel_dense(int n, std::uint64_t seed) {
    if (n < 1) throw Error(Errc::dimension_mismatch, "state space must be nonempty");
    SplitMix64 rng(seed);
    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) rows.push_back(random_row(rng, n, all_sites(n)));
    return Kernel::unchecked(std::move(rows));
}

Kernel gen_kernel_block(const Partition& g, std::uint64_t seed) {
    int n = g.ambient_size();
    if (n < 1) throw Error(Errc::dimension_mismatch, "state space must be nonempty");
    SplitMix64 rng(seed);
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(n));
    for (const EventSet& b : g.blocks()) {
        std::vector<Rat> row = random_row(rng, n, b.members());
        for (int x : b.members()) rows[static_cast<size_t>(x)] = row;
    }
    return Kernel::unchecked(std::move(rows));
}

Kernel gen_kernel_near_rcd(const Measure& nu, const Partition& g, std::uint64_t seed) {
    Kernel base = make_rcd(nu, g);
    int n = nu.size();
    if (n < 2) return base;
    SplitMix64 rng(seed);

    std::vector<int> positive;
    for (int i = 0; i < g.block_count(); ++i)
        if (!measure_of_set(nu, g.block(i)).is_zero()) positive.push_back(i);
    const EventSet& b = g.block(positive[rng.below(positive.size())]);
    auto xs = b.members();
    int x = xs[rng.below(xs.size())];

    std::vector<Rat> row = base.row(x);
    std::vector<int> donors;
    for (int i = 0; i < n; ++i)
        if (!row[static_cast<size_t>(i)].is_zero()) donors.push_back(i);
    int from = donors[rng.below(donors.size())];
    int to = rng.below_int(n - 1);
    if (to >= from) ++to;
    Rat amount = row[static_cast<size_t>(from)] * Rat(BigInt(1 + rng.below(8)), BigInt(8));
    row[static_cast<size_t>(from)] -= amount;
    row[static_cast<size_t>(to)] += amount;

    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<size_t>(n));
    for (int y = 0; y < n; ++y) rows.push_back(y == x ? row : base.row(y));
    return Kernel::unchecked(std::move(rows));
}

Partition gen_partition(int n, std::uint64_t seed) {
    if (n < 1) throw Error(Errc::dimension_mismatch, "state space must be nonempty");
    if (n > 25)
        throw Error(Errc::too_large,
                    "restricted-growth suffix counts overflow 64 bits beyond 25 states");

    // suffix_count[k][m]: restricted-growth suffixes of length k when the
    // prefix maximum so far is m.  count(0, m) = 1,
    // count(k, m) = (m+1) count(k-1, m) + count(k-1, m+1).
    std::vector<std::vector<std::uint64_t>> suffix_count(
        static_cast<size_t>(n), std::vector<std::uint64_t>(static_cast<size_t>(n) + 2, 0));
    for (int m = 0; m <= n; ++m) suffix_count[0][static_cast<size_t>(m)] = 1;
    for (int k = 1; k < n; ++k)
        for (int m = 0; m <= n; ++m) {
            std::uint64_t stay = static_cast<std::uint64_t>(m + 1) * suffix_count[static_cast<size_t>(k - 1)][static_cast<size_t>(m)];
            std::uint64_t grow = m + 1 <= n ? suffix_count[static_cast<size_t>(k - 1)][static_cast<size_t>(m + 1)] : 0;
            suffix_count[static_cast<size_t>(k)][static_cast<size_t>(m)] = stay + grow;
        }

    SplitMix64 rng(seed);
    std::vector<int> labels(static_cast<size_t>(n), 0);
    int prefix_max = 0;
    for (int i = 1; i < n; ++i) {
        int k = n - 1 - i;  // positions left after this one
        std::uint64_t stay_each = suffix_count[static_cast<size_t>(k)][static_cast<size_t>(prefix_max)];
        std::uint64_t stay_total = static_cast<std::uint64_t>(prefix_max + 1) * stay_each;
        std::uint64_t grow = suffix_count[static_cast<size_t>(k)][static_cast<size_t>(prefix_max + 1)];
        std::uint64_t pick = rng.below(stay_total + grow);
        if (pick < stay_total) {
            labels[static_cast<size_t>(i)] = static_cast<int>(pick / stay_each);
        } else {
            ++prefix_max;
            labels[static_cast<size_t>(i)] = prefix_max;
        }
    }
    return Partition::from_labels(labels);
}

namespace {

bool witness_empty(const Witness& w) {
    return !w.x && !w.y && !w.z && !w.A && !w.B && !w.lhs && !w.rhs;
}

bool conclude(const PropertyVerdict& v, Witness& w) {
    if (!v.holds && v.witness) w = *v.witness;
    return v.holds;
}

bool rows_constant_on(const Kernel& r, const Partition& g) {
    for (const EventSet& b : g.blocks()) {
        auto xs = b.members();
        for (size_t i = 1; i < xs.size(); ++i)
            if (r.row(xs[i]) != r.row(xs[0])) return false;
    }
    return true;
}

// Moves every nu-null state to an arbitrary block (possibly a fresh one).
// The result agrees with g on support(nu) by construction.
Partition reshuffle_null_states(const Partition& g, const Measure& nu, SplitMix64& rng) {
    int n = g.ambient_size();
    std::vector<int> labels(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) labels[static_cast<size_t>(x)] = g.block_index_of(x);
    int fresh = g.block_count();
    for (int x = 0; x < n; ++x)
        if (nu[x].is_zero()) labels[static_cast<size_t>(x)] = rng.below_int(fresh + 1);
    return Partition::from_labels(labels);
}

enum class KV { dense, block, rcd, near };

// Shared trial builder: picks one of the listed kernel families per trial.
std::function<LawTrial(int, SplitMix64&)> kernel_mix(std::vector<KV> variants) {
    return [variants](int n, SplitMix64& rng) {
        LawTrial t;
        KV v = variants[rng.below(variants.size())];
        bool az = rng.below(2) == 0;
        switch (v) {
            case KV::dense:
                t.nu = gen_measure(n, rng.next(), az);
                t.kernel = gen_kernel_dense(n, rng.next());
                break;
            case KV::block: {
                Partition g = gen_partition(n, rng.next());
                t.nu = gen_measure(n, rng.next(), az);
                t.kernel = gen_kernel_block(g, rng.next());
                break;
            }
            case KV::rcd: {
                Partition g = gen_partition(n, rng.next());
                t.nu = gen_measure(n, rng.next(), az);
                t.kernel = make_rcd(t.nu, g);
                break;
            }
            case KV::near: {
                Partition g = gen_partition(n, rng.next());
                t.nu = gen_measure(n, rng.next(), az);
                t.kernel = gen_kernel_near_rcd(t.nu, g, rng.next());
                break;
            }
        }
        return t;
    };
}

LawTrial two_atom_fixture() {
    // Three states, two equal rows; skewed measure keeps totality but breaks
    // stationarity.
    LawTrial t;
    t.nu = Measure({Rat(1, 3), Rat(1, 2), Rat(1, 6)});
    t.kernel = Kernel({{Rat(1), Rat(0), Rat(0)},
                       {Rat(0), Rat(1, 2), Rat(1, 2)},
                       {Rat(0), Rat(1, 2), Rat(1, 2)}});
    return t;
}

LawTrial leaky_atom_fixture() {
    // Four states, idempotent, self-reversible; the first row abandons its
    // own singleton block, so totality fails under the uniform measure.
    LawTrial t;
    t.nu = uniform_measure(4);
    t.kernel = Kernel({{Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3)},
                       {Rat(0), Rat(1), Rat(0), Rat(0)},
                       {Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)},
                       {Rat(0), Rat(0), Rat(1, 2), Rat(1, 2)}});
    return t;
}

std::vector<Law> build_registry() {
    std::vector<Law> laws;

    auto add = [&laws](Law l) { laws.push_back(std::move(l)); };

    {
        Law l;
        l.id = "L1";
        l.statement = "detailed balance implies stationarity";
        l.generator_hint = "rcd";
        l.generate = kernel_mix({KV::rcd, KV::rcd, KV::block, KV::dense});
        l.premise = [](const LawTrial& t) { return check_reversible(t.kernel, t.nu).holds; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            return conclude(check_stationary(t.kernel, t.nu), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L2";
        l.statement = "self-reversibility implies self-compatibility";
        l.generator_hint = "block-structured";
        l.generate = kernel_mix({KV::block, KV::rcd, KV::dense});
        l.premise = [](const LawTrial& t) { return check_self_reversible(t.kernel, t.nu).holds; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            return conclude(check_self_compatible(t.kernel, t.nu), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L3";
        l.statement = "totality and properness coincide for every partition";
        l.generator_hint = "block-structured";
        l.generate = [](int n, SplitMix64& rng) {
            LawTrial t;
            Partition g = gen_partition(n, rng.next());
            t.nu = gen_measure(n, rng.next(), rng.below(2) == 0);
            switch (rng.below(4)) {
                case 0: t.kernel = make_rcd(t.nu, g); break;
                case 1: t.kernel = gen_kernel_block(g, rng.next()); break;
                case 2: t.kernel = gen_kernel_block(gen_partition(n, rng.next()), rng.next()); break;
                default: t.kernel = gen_kernel_dense(n, rng.next()); break;
            }
            t.partition = std::move(g);
            return t;
        };
        l.premise = [](const LawTrial&) { return true; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            PropertyVerdict total = check_total(t.kernel, t.nu, *t.partition);
            PropertyVerdict proper = check_proper(t.kernel, t.nu, *t.partition);
            if (total.holds == proper.holds) return true;
            conclude(total.holds ? proper : total, w);
            return false;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L4";
        l.statement = "synthesized conditional kernels are proper and total";
        l.generator_hint = "rcd";
        l.generate = [](int n, SplitMix64& rng) {
            LawTrial t;
            t.partition = gen_partition(n, rng.next());
            t.nu = gen_measure(n, rng.next(), rng.below(2) == 0);
            t.kernel = make_rcd(t.nu, *t.partition);
            return t;
        };
        l.premise = [](const LawTrial&) { return true; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            Kernel r = make_rcd(t.nu, *t.partition);
            return conclude(check_proper(r, t.nu, *t.partition), w) &&
                   conclude(check_total(r, t.nu, *t.partition), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L5";
        l.statement =
            "self-reversibility plus stationarity on the row partition imply totality";
        l.generator_hint = "block-structured";
        l.generate = kernel_mix({KV::block, KV::block, KV::rcd, KV::dense});
        l.premise = [](const LawTrial& t) {
            if (!check_self_reversible(t.kernel, t.nu).holds) return false;
            RestrictionScope scope;
            scope.partition = sigma_of_kernel(t.kernel);
            return check_stationary(t.kernel, t.nu, scope).holds;
        };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            return conclude(check_total(t.kernel, t.nu, sigma_of_kernel(t.kernel)), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L6";
        l.statement =
            "totality implies self-reversibility and detailed balance on the row partition";
        l.generator_hint = "block-structured";
        l.generate = kernel_mix({KV::block, KV::rcd, KV::near, KV::dense});
        l.premise = [](const LawTrial& t) {
            return check_total(t.kernel, t.nu, sigma_of_kernel(t.kernel)).holds;
        };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            if (!conclude(check_self_reversible(t.kernel, t.nu), w)) return false;
            RestrictionScope scope;
            scope.partition = sigma_of_kernel(t.kernel);
            return conclude(check_reversible(t.kernel, t.nu, scope), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L7";
        l.statement = "under full support, self-reversibility forces 0/1 own-block mass";
        l.generator_hint = "block-structured";
        l.generate = kernel_mix({KV::block, KV::block, KV::rcd, KV::dense});
        l.premise = [](const LawTrial& t) {
            return support(t.nu).count() == t.nu.size() &&
                   check_self_reversible(t.kernel, t.nu).holds;
        };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            return conclude(check_trivial(t.kernel, t.nu, sigma_of_kernel(t.kernel)), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L8";
        l.statement = "the decision procedure agrees with the exhaustive partition scan";
        l.generator_hint = "dense";
        l.max_n = 5;
        l.generate = kernel_mix({KV::dense, KV::block, KV::rcd, KV::near});
        l.premise = [](const LawTrial&) { return true; };
        l.conclusion = [](const LawTrial& t, Witness&) {
            bool decided = is_rcd(t.kernel, t.nu).is_rcd;
            bool scanned = !oracle_is_rcd(t.kernel, t.nu).accepted.empty();
            return decided == scanned;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L9";
        l.statement = "a total kernel is a conditional distribution for its own pushforward";
        l.generator_hint = "block-structured";
        l.generate = kernel_mix({KV::block, KV::rcd, KV::near, KV::dense});
        l.premise = [](const LawTrial& t) {
            return check_total(t.kernel, t.nu, sigma_of_kernel(t.kernel)).holds;
        };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            RcdVerdict v = is_rcd(t.kernel, stationarize(t.kernel, t.nu));
            if (!v.is_rcd && v.witness) w = *v.witness;
            return v.is_rcd;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L10";
        l.statement = "conditional distributions are stationary, reversible, and self-consistent";
        l.generator_hint = "rcd";
        l.generate = kernel_mix({KV::rcd, KV::rcd, KV::rcd, KV::near});
        l.premise = [](const LawTrial& t) { return is_rcd(t.kernel, t.nu).is_rcd; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            return conclude(check_stationary(t.kernel, t.nu), w) &&
                   conclude(check_reversible(t.kernel, t.nu), w) &&
                   conclude(check_self_compatible(t.kernel, t.nu), w) &&
                   conclude(check_self_reversible(t.kernel, t.nu), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L11";
        l.statement = "under everywhere self-compatibility, block masses determine rows";
        l.generator_hint = "rcd";
        l.generate = kernel_mix({KV::rcd, KV::rcd, KV::block, KV::dense});
        l.premise = [](const LawTrial& t) { return compose(t.kernel, t.kernel) == t.kernel; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            Partition sigma = sigma_of_kernel(t.kernel);
            int n = t.kernel.size();
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    bool same_on_blocks = true;
                    for (const EventSet& b : sigma.blocks())
                        if (t.kernel.row_mass(x, b) != t.kernel.row_mass(y, b)) {
                            same_on_blocks = false;
                            break;
                        }
                    if (same_on_blocks && t.kernel.row(x) != t.kernel.row(y)) {
                        w.x = x;
                        w.y = y;
                        return false;
                    }
                }
            return true;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L12";
        l.statement = "own-block mass is constant on each block of the row partition";
        l.generator_hint = "dense";
        l.generate = kernel_mix({KV::dense, KV::block});
        l.premise = [](const LawTrial&) { return true; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            Partition sigma = sigma_of_kernel(t.kernel);
            for (const EventSet& b : sigma.blocks()) {
                auto xs = b.members();
                Rat first = t.kernel.row_mass(xs[0], b);
                for (size_t i = 1; i < xs.size(); ++i)
                    if (t.kernel.row_mass(xs[i], b) != first) {
                        w.x = xs[0];
                        w.y = xs[static_cast<int>(i)];
                        w.A = b;
                        return false;
                    }
            }
            return true;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L13";
        l.statement = "a partition refines the row partition iff rows are constant on its blocks";
        l.generator_hint = "block-structured";
        l.generate = [](int n, SplitMix64& rng) {
            LawTrial t;
            t.nu = gen_measure(n, rng.next(), rng.below(2) == 0);
            switch (rng.below(4)) {
                case 0: {
                    Partition g0 = gen_partition(n, rng.next());
                    t.kernel = gen_kernel_block(g0, rng.next());
                    t.partition = meet(g0, gen_partition(n, rng.next()));
                    break;
                }
                case 1: {
                    Partition g0 = gen_partition(n, rng.next());
                    t.kernel = gen_kernel_block(g0, rng.next());
                    t.partition = gen_partition(n, rng.next());
                    break;
                }
                case 2: {
                    t.kernel = gen_kernel_dense(n, rng.next());
                    t.partition = gen_partition(n, rng.next());
                    break;
                }
                default: {
                    Partition g0 = gen_partition(n, rng.next());
                    t.kernel = make_rcd(t.nu, g0);
                    t.partition = std::move(g0);
                    break;
                }
            }
            return t;
        };
        l.premise = [](const LawTrial&) { return true; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            bool fine = refines(*t.partition, sigma_of_kernel(t.kernel));
            bool constant = rows_constant_on(t.kernel, *t.partition);
            if (fine == constant) return true;
            for (const EventSet& b : t.partition->blocks()) {
                auto xs = b.members();
                for (size_t i = 1; i < xs.size(); ++i)
                    if (t.kernel.row(xs[i]) != t.kernel.row(xs[0])) {
                        w.x = xs[0];
                        w.y = xs[static_cast<int>(i)];
                        w.A = b;
                    }
            }
            return false;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L14";
        l.statement = "every partition accepted by the scan matches the row partition up to null sets";
        l.generator_hint = "rcd";
        l.max_n = 5;
        l.generate = kernel_mix({KV::rcd, KV::rcd, KV::near, KV::dense});
        l.premise = [](const LawTrial& t) { return !oracle_is_rcd(t.kernel, t.nu).accepted.empty(); };
        l.conclusion = [](const LawTrial& t, Witness&) {
            Partition sigma = sigma_of_kernel(t.kernel);
            for (const Partition& g : oracle_is_rcd(t.kernel, t.nu).accepted)
                if (!essentially_equal(g, sigma, t.nu)) return false;
            return true;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L15";
        l.statement = "synthesized rows agree within every positive-mass block";
        l.generator_hint = "rcd";
        l.generate = [](int n, SplitMix64& rng) {
            LawTrial t;
            t.partition = gen_partition(n, rng.next());
            t.nu = gen_measure(n, rng.next(), true);
            t.kernel = make_rcd(t.nu, *t.partition);
            return t;
        };
        l.premise = [](const LawTrial& t) {
            for (const EventSet& b : t.partition->blocks())
                if (b.count() >= 2 && !measure_of_set(t.nu, b).is_zero()) return true;
            return false;
        };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            Kernel r = make_rcd(t.nu, *t.partition);
            for (const EventSet& b : t.partition->blocks()) {
                if (measure_of_set(t.nu, b).is_zero()) continue;
                auto xs = b.members();
                for (size_t i = 1; i < xs.size(); ++i)
                    if (r.row(xs[i]) != r.row(xs[0])) {
                        w.x = xs[0];
                        w.y = xs[static_cast<int>(i)];
                        w.A = b;
                        return false;
                    }
            }
            return true;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L16";
        l.statement = "on a positive-mass block, synthesized rows equal the conditioned measure";
        l.generator_hint = "rcd";
        l.generate = [](int n, SplitMix64& rng) {
            LawTrial t;
            t.partition = gen_partition(n, rng.next());
            t.nu = gen_measure(n, rng.next(), rng.below(2) == 0);
            t.kernel = make_rcd(t.nu, *t.partition);
            return t;
        };
        l.premise = [](const LawTrial&) { return true; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            Kernel r = make_rcd(t.nu, *t.partition);
            for (const EventSet& b : t.partition->blocks()) {
                if (measure_of_set(t.nu, b).is_zero()) continue;
                std::vector<Rat> expected = conditional_measure(t.nu, b).weights();
                for (int x : b.members())
                    if (r.row(x) != expected) {
                        w.x = x;
                        w.A = b;
                        return false;
                    }
            }
            return true;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L17";
        l.statement = "partitions equal up to null sets synthesize the same rows on the support";
        l.generator_hint = "rcd";
        l.generate = [](int n, SplitMix64& rng) {
            LawTrial t;
            t.partition = gen_partition(n, rng.next());
            t.nu = gen_measure(n, rng.next(), true);
            if (rng.below(2) == 0)
                t.aux_partition = reshuffle_null_states(*t.partition, t.nu, rng);
            else
                t.aux_partition = gen_partition(n, rng.next());
            t.kernel = make_rcd(t.nu, *t.partition);
            return t;
        };
        l.premise = [](const LawTrial& t) {
            return essentially_equal(*t.partition, *t.aux_partition, t.nu);
        };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            Kernel a = make_rcd(t.nu, *t.partition);
            Kernel b = make_rcd(t.nu, *t.aux_partition);
            for (int x : support(t.nu).members())
                if (a.row(x) != b.row(x)) {
                    w.x = x;
                    return false;
                }
            return true;
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "L18";
        l.statement = "the strict decision procedure only accepts absolutely continuous kernels";
        l.generator_hint = "rcd";
        l.generate = kernel_mix({KV::rcd, KV::rcd, KV::rcd, KV::dense});
        l.premise = [](const LawTrial& t) { return is_rcd_gcp(t.kernel, t.nu).is_rcd; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            return conclude(check_abs_continuous(t.kernel, t.nu), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "SANITY-1";
        l.statement = "totality on the row partition implies stationarity (expected to fail)";
        l.generator_hint = "block-structured";
        l.expected_to_fail = true;
        l.fixture = two_atom_fixture();
        l.generate = kernel_mix({KV::block, KV::dense});
        l.premise = [](const LawTrial& t) {
            return check_total(t.kernel, t.nu, sigma_of_kernel(t.kernel)).holds;
        };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            return conclude(check_stationary(t.kernel, t.nu), w);
        };
        add(std::move(l));
    }
    {
        Law l;
        l.id = "SANITY-2";
        l.statement = "self-reversibility implies totality on the row partition (expected to fail)";
        l.generator_hint = "block-structured";
        l.expected_to_fail = true;
        l.fixture = leaky_atom_fixture();
        l.generate = kernel_mix({KV::block, KV::dense});
        l.premise = [](const LawTrial& t) { return check_self_reversible(t.kernel, t.nu).holds; };
        l.conclusion = [](const LawTrial& t, Witness& w) {
            return conclude(check_total(t.kernel, t.nu, sigma_of_kernel(t.kernel)), w);
        };
        add(std::move(l));
    }

    return laws;
}

}  // namespace

const std::vector<Law>& law_registry() {
    static const std::vector<Law> laws = build_registry();
    return laws;
}

const Law& find_law(const std::string& id) {
    for (const Law& l : law_registry())
        if (l.id == id) return l;
    throw Error(Errc::unknown_law, "unknown law '" + id + "'");
}

LawReport run_law(const std::string& id, int trials, std::uint64_t seed,
                  std::pair<int, int> n_range, Mode mode) {
    if (mode != Mode::rational)
        throw Error(Errc::float_mode_refused, "law campaigns run in exact arithmetic only");
    if (n_range.first < 1 || n_range.first > n_range.second)
        throw Error(Errc::usage, "invalid state count range");
    if (trials < 0) throw Error(Errc::usage, "trial count must be nonnegative");
    const Law& law = find_law(id);

    LawReport rep;
    rep.law = id;
    rep.trials = trials;
    rep.seed = seed;
    rep.n_range = n_range;
    rep.generator_version = kGeneratorVersion;

    auto started = std::chrono::steady_clock::now();
    for (int i = 0; i < trials; ++i) {
        SplitMix64 rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
        int n = n_range.first + rng.below_int(n_range.second - n_range.first + 1);
        if (n > law.max_n) n = law.max_n;

        LawTrial trial;
        bool fixture_fits = law.fixture && law.fixture->nu.size() >= n_range.first &&
                            law.fixture->nu.size() <= n_range.second;
        if (i == 0 && fixture_fits)
            trial = *law.fixture;
        else
            trial = law.generate(n, rng);

        if (!law.premise(trial)) continue;
        ++rep.premise_hits;

        Witness w;
        if (law.conclusion(trial, w)) continue;

        // Counterexamples must replay: re-run both predicates before recording.
        Witness replay;
        if (law.premise(trial) && !law.conclusion(trial, replay)) {
            Counterexample ce;
            ce.trial = std::move(trial);
            if (!witness_empty(w)) ce.witness = std::move(w);
            rep.counterexamples.push_back(std::move(ce));
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

namespace {

bool state_removable(const LawTrial& t, int x) {
    int n = t.nu.size();
    if (n < 2) return false;
    if (t.nu[x] == Rat(1)) return false;
    for (int y = 0; y < n; ++y)
        if (y != x && t.kernel.entry(y, x) == Rat(1)) return false;
    return true;
}

Partition drop_state(const Partition& g, int gone) {
    int n = g.ambient_size();
    std::vector<int> labels;
    labels.reserve(static_cast<size_t>(n) - 1);
    for (int x = 0; x < n; ++x)
        if (x != gone) labels.push_back(g.block_index_of(x));
    return Partition::from_labels(labels);
}

LawTrial remove_state(const LawTrial& t, int gone) {
    int n = t.nu.size();
    LawTrial out;

    Rat keep_mass = Rat(1) - t.nu[gone];
    std::vector<Rat> weights;
    weights.reserve(static_cast<size_t>(n) - 1);
    for (int x = 0; x < n; ++x)
        if (x != gone) weights.push_back(t.nu[x] / keep_mass);
    out.nu = Measure::unchecked(std::move(weights));

    std::vector<std::vector<Rat>> rows;
    rows.reserve(static_cast<size_t>(n) - 1);
    for (int x = 0; x < n; ++x) {
        if (x == gone) continue;
        Rat keep_row = Rat(1) - t.kernel.entry(x, gone);
        std::vector<Rat> row;
        row.reserve(static_cast<size_t>(n) - 1);
        for (int y = 0; y < n; ++y)
            if (y != gone) row.push_back(t.kernel.entry(x, y) / keep_row);
        rows.push_back(std::move(row));
    }
    out.kernel = Kernel::unchecked(std::move(rows));

    if (t.partition) out.partition = drop_state(*t.partition, gone);
    if (t.aux_partition) out.aux_partition = drop_state(*t.aux_partition, gone);
    return out;
}

}  // namespace

Counterexample shrink(const Counterexample& ce, const std::string& law_id) {
    const Law& law = find_law(law_id);
    auto violates = [&law](const LawTrial& t, Witness& w) {
        return law.premise(t) && !law.conclusion(t, w);
    };

    Witness w;
    if (!violates(ce.trial, w))
        throw Error(Errc::not_a_counterexample,
                    "input does not violate law '" + law_id + "'");

    LawTrial current = ce.trial;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int x = 0; x < current.nu.size(); ++x) {
            if (!state_removable(current, x)) continue;
            LawTrial candidate = remove_state(current, x);
            Witness wc;
            if (violates(candidate, wc)) {
                current = std::move(candidate);
                progress = true;
                break;
            }
        }
    }

    Counterexample out;
    Witness final_witness;
    violates(current, final_witness);
    out.trial = std::move(current);
    if (!witness_empty(final_witness)) out.witness = std::move(final_witness);
    return out;
}

nlohmann::ordered_json trial_to_json(const LawTrial& t) {
    nlohmann::ordered_json j;
    j["n"] = t.nu.size();
    nlohmann::ordered_json nu = nlohmann::ordered_json::array();
    for (const Rat& v : t.nu.weights()) nu.push_back(v.str());
    j["nu"] = nu;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int x = 0; x < t.kernel.size(); ++x) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (const Rat& v : t.kernel.row(x)) row.push_back(v.str());
        rows.push_back(row);
    }
    j["R"] = rows;
    if (t.partition) j["partition"] = partition_to_json(*t.partition);
    if (t.aux_partition) j["aux_partition"] = partition_to_json(*t.aux_partition);
    return j;
}

nlohmann::ordered_json counterexample_to_json(const Counterexample& c) {
    nlohmann::ordered_json j = trial_to_json(c.trial);
    if (c.witness) j["witness"] = witness_to_json(*c.witness);
    return j;
}

nlohmann::ordered_json law_report_to_json(const LawReport& r) {
    nlohmann::ordered_json j;
    j["law"] = r.law;
    j["trials"] = r.trials;
    j["premise_hits"] = r.premise_hits;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const Counterexample& c : r.counterexamples) cs.push_back(counterexample_to_json(c));
    j["counterexamples"] = cs;
    j["seed"] = r.seed;
    j["n_range"] = {r.n_range.first, r.n_range.second};
    j["generator_version"] = r.generator_version;
    return j;
}

}  // namespace rcdkit
