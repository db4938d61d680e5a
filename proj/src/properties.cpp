#include "rcdkit/properties.hpp"

#include "rcdkit/rcd.hpp"

#include <vector>

namespace rcdkit {

namespace {

void check_sizes(const Kernel& r, const Measure& nu) {
    if (r.size() != nu.size()) throw Error(Errc::dimension_mismatch, "measure/kernel size mismatch");
}

void check_sizes(const Kernel& r, const Measure& nu, const Partition& g) {
    check_sizes(r, nu);
    if (g.ambient_size() != r.size())
        throw Error(Errc::dimension_mismatch, "partition/kernel size mismatch");
}

std::vector<int> support_states(const Measure& nu, const NumericMode& mode) {
    std::vector<int> out;
    for (int x = 0; x < nu.size(); ++x)
        if (!mode.is_zero(nu[x])) out.push_back(x);
    return out;
}

PropertyVerdict fail(Witness w) {
    PropertyVerdict v;
    v.holds = false;
    v.witness = std::move(w);
    return v;
}

PropertyVerdict pass() {
    PropertyVerdict v;
    v.holds = true;
    return v;
}

EventSet positive_block_union(const Measure& nu, const Partition& g, const NumericMode& mode) {
    EventSet u(nu.size());
    for (const EventSet& b : g.blocks())
        if (!mode.is_zero(measure_of_set(nu, b))) u = u.unite(b);
    return u;
}

}  // namespace

PropertyVerdict check_stationary(const Kernel& r, const Measure& nu, const RestrictionScope& scope,
                                 const NumericMode& mode) {
    check_sizes(r, nu);
    if (!scope.partition) {
        Measure pushed = propagate(nu, r);
        for (int y = 0; y < nu.size(); ++y) {
            if (!mode.eq(pushed[y], nu[y])) {
                Witness w;
                w.B = EventSet::of(nu.size(), {y});
                w.lhs = pushed[y];
                w.rhs = nu[y];
                return fail(std::move(w));
            }
        }
        return pass();
    }
    const Partition& g = *scope.partition;
    check_sizes(r, nu, g);
    for (const EventSet& b : g.blocks()) {
        Rat in_flow(0);
        for (int x = 0; x < nu.size(); ++x)
            if (!nu[x].is_zero()) in_flow += nu[x] * r.row_mass(x, b);
        Rat mass = measure_of_set(nu, b);
        if (!mode.eq(in_flow, mass)) {
            Witness w;
            w.B = b;
            w.lhs = in_flow;
            w.rhs = mass;
            return fail(std::move(w));
        }
    }
    return pass();
}

PropertyVerdict check_reversible(const Kernel& r, const Measure& nu, const RestrictionScope& scope,
                                 const NumericMode& mode) {
    check_sizes(r, nu);
    if (!scope.partition) {
        for (int x = 0; x < nu.size(); ++x)
            for (int y = x + 1; y < nu.size(); ++y) {
                Rat lhs = nu[x] * r.entry(x, y);
                Rat rhs = nu[y] * r.entry(y, x);
                if (!mode.eq(lhs, rhs)) {
                    Witness w;
                    w.x = x;
                    w.y = y;
                    w.lhs = lhs;
                    w.rhs = rhs;
                    return fail(std::move(w));
                }
            }
        return pass();
    }
    const Partition& g = *scope.partition;
    check_sizes(r, nu, g);
    for (int i = 0; i < g.block_count(); ++i)
        for (int j = i + 1; j < g.block_count(); ++j) {
            const EventSet& d = g.block(i);
            const EventSet& e = g.block(j);
            Rat lhs(0), rhs(0);  // flow e -> d vs d -> e, weighted by nu
            for (int x : e.members())
                if (!nu[x].is_zero()) lhs += nu[x] * r.row_mass(x, d);
            for (int x : d.members())
                if (!nu[x].is_zero()) rhs += nu[x] * r.row_mass(x, e);
            if (!mode.eq(lhs, rhs)) {
                Witness w;
                w.A = d;
                w.B = e;
                w.lhs = lhs;
                w.rhs = rhs;
                return fail(std::move(w));
            }
        }
    return pass();
}

PropertyVerdict check_self_compatible(const Kernel& r, const Measure& nu, const NumericMode& mode) {
    check_sizes(r, nu);
    int n = r.size();
    for (int x : support_states(nu, mode))
        for (int z = 0; z < n; ++z) {
            Rat two_step(0);
            for (int y = 0; y < n; ++y) {
                const Rat& rxy = r.entry(x, y);
                if (!rxy.is_zero()) two_step += rxy * r.entry(y, z);
            }
            if (!mode.eq(two_step, r.entry(x, z))) {
                Witness w;
                w.x = x;
                w.z = z;
                w.lhs = two_step;
                w.rhs = r.entry(x, z);
                return fail(std::move(w));
            }
        }
    return pass();
}

PropertyVerdict check_self_reversible(const Kernel& r, const Measure& nu, const NumericMode& mode) {
    check_sizes(r, nu);
    int n = r.size();
    for (int x : support_states(nu, mode))
        for (int y = 0; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                Rat lhs = r.entry(x, y) * r.entry(y, z);
                Rat rhs = r.entry(x, z) * r.entry(z, y);
                if (!mode.eq(lhs, rhs)) {
                    Witness w;
                    w.x = x;
                    w.y = y;
                    w.z = z;
                    w.lhs = lhs;
                    w.rhs = rhs;
                    return fail(std::move(w));
                }
            }
    return pass();
}

PropertyVerdict check_proper(const Kernel& r, const Measure& nu, const Partition& g,
                             const NumericMode& mode) {
    check_sizes(r, nu, g);
    for (int i = 0; i < g.block_count(); ++i) {
        const EventSet& b = g.block(i);
        if (mode.is_zero(measure_of_set(nu, b))) continue;
        for (int x : b.members()) {
            Rat own = r.row_mass(x, b);
            if (!mode.is_one(own)) {
                Witness w;
                w.x = x;
                w.A = b;
                w.lhs = own;
                w.rhs = Rat(1);
                return fail(std::move(w));
            }
            for (int j = 0; j < g.block_count(); ++j) {
                if (j == i) continue;
                Rat other = r.row_mass(x, g.block(j));
                if (!mode.is_zero(other)) {
                    Witness w;
                    w.x = x;
                    w.A = g.block(j);
                    w.lhs = other;
                    w.rhs = Rat(0);
                    return fail(std::move(w));
                }
            }
        }
    }
    PropertyVerdict v = pass();
    v.certificate = positive_block_union(nu, g, mode);
    return v;
}

PropertyVerdict check_total(const Kernel& r, const Measure& nu, const Partition& g,
                            const NumericMode& mode) {
    check_sizes(r, nu, g);
    for (const EventSet& b : g.blocks()) {
        if (mode.is_zero(measure_of_set(nu, b))) continue;
        for (int x : b.members()) {
            Rat own = r.row_mass(x, b);
            if (!mode.is_one(own)) {
                Witness w;
                w.x = x;
                w.A = b;
                w.lhs = own;
                w.rhs = Rat(1);
                return fail(std::move(w));
            }
        }
    }
    PropertyVerdict v = pass();
    v.certificate = positive_block_union(nu, g, mode);
    return v;
}

PropertyVerdict check_trivial(const Kernel& r, const Measure& nu, const Partition& g,
                              const NumericMode& mode) {
    check_sizes(r, nu, g);
    for (int x : support_states(nu, mode)) {
        Rat own = r.row_mass(x, g.block_of(x));
        if (!mode.is_zero(own) && !mode.is_one(own)) {
            Witness w;
            w.x = x;
            w.A = g.block_of(x);
            w.lhs = own;
            return fail(std::move(w));
        }
    }
    return pass();
}

PropertyVerdict check_abs_continuous(const Kernel& r, const Measure& nu, const NumericMode& mode) {
    check_sizes(r, nu);
    for (int x : support_states(nu, mode))
        for (int y = 0; y < nu.size(); ++y)
            if (mode.is_zero(nu[y]) && !mode.is_zero(r.entry(x, y))) {
                Witness w;
                w.x = x;
                w.y = y;
                w.lhs = r.entry(x, y);
                w.rhs = nu[y];
                return fail(std::move(w));
            }
    return pass();
}

PropertyProfile profile(const Kernel& r, const Measure& nu, const std::optional<Partition>& g,
                        const NumericMode& mode) {
    check_sizes(r, nu);
    PropertyProfile p;
    p.sigma = sigma_of_kernel(r, mode);
    p.conditioning = g ? *g : p.sigma;
    if (p.conditioning.ambient_size() != r.size())
        throw Error(Errc::dimension_mismatch, "partition/kernel size mismatch");
    p.stationary = check_stationary(r, nu, {}, mode);
    p.reversible = check_reversible(r, nu, {}, mode);
    p.self_compatible = check_self_compatible(r, nu, mode);
    p.self_reversible = check_self_reversible(r, nu, mode);
    p.proper = check_proper(r, nu, p.conditioning, mode);
    p.total = check_total(r, nu, p.conditioning, mode);
    p.trivial = check_trivial(r, nu, p.conditioning, mode);
    p.abs_continuous = check_abs_continuous(r, nu, mode);
    return p;
}

nlohmann::ordered_json witness_to_json(const Witness& w) {
    nlohmann::ordered_json j;
    if (w.x) j["x"] = *w.x;
    if (w.y) j["y"] = *w.y;
    if (w.z) j["z"] = *w.z;
    if (w.A) j["A"] = w.A->members();
    if (w.B) j["B"] = w.B->members();
    if (w.lhs) j["lhs"] = w.lhs->str();
    if (w.rhs) j["rhs"] = w.rhs->str();
    return j;
}

nlohmann::ordered_json verdict_to_json(const PropertyVerdict& v) {
    nlohmann::ordered_json j;
    j["holds"] = v.holds;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    if (v.certificate) j["certificate"] = v.certificate->members();
    return j;
}

nlohmann::ordered_json partition_to_json(const Partition& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const EventSet& b : p.blocks()) j.push_back(b.members());
    return j;
}

nlohmann::ordered_json profile_to_json(const PropertyProfile& p) {
    nlohmann::ordered_json j;
    j["sigma"] = partition_to_json(p.sigma);
    j["partition"] = partition_to_json(p.conditioning);
    nlohmann::ordered_json props;
    props["S"] = verdict_to_json(p.stationary);
    props["R"] = verdict_to_json(p.reversible);
    props["SC"] = verdict_to_json(p.self_compatible);
    props["SR"] = verdict_to_json(p.self_reversible);
    props["P"] = verdict_to_json(p.proper);
    props["T"] = verdict_to_json(p.total);
    props["trivial"] = verdict_to_json(p.trivial);
    props["ac"] = verdict_to_json(p.abs_continuous);
    j["properties"] = props;
    return j;
}

}  // namespace rcdkit
