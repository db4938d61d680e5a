#pragma once

#include <utility>
#include <vector>

#include "rcdkit/errors.hpp"
#include "rcdkit/event_set.hpp"
#include "rcdkit/rational.hpp"

namespace rcdkit {

// Probability measure on {0, ..., n-1}.  Weights are nonnegative and sum to 1
// (within epsilon when validated under a tolerance mode).
class Measure {
public:
    Measure() = default;

    explicit Measure(std::vector<Rat> weights, const NumericMode& mode = {}) : w_(std::move(weights)) {
        Rat total(0);
        for (const Rat& v : w_) {
            if (v.negative()) throw Error(Errc::not_a_probability, "negative measure weight " + v.str());
            total += v;
        }
        if (!mode.is_one(total))
            throw Error(Errc::not_a_probability, "measure weights sum to " + total.str() + ", not 1");
    }

    // For values computed from already-validated inputs (pushforwards,
    // conditionals); skips re-validation.
    static Measure unchecked(std::vector<Rat> weights) {
        Measure m;
        m.w_ = std::move(weights);
        return m;
    }

    int size() const { return static_cast<int>(w_.size()); }

    const Rat& at(int x) const {
        if (x < 0 || x >= size()) throw Error(Errc::index_out_of_range, "state index out of range");
        return w_[static_cast<size_t>(x)];
    }
    const Rat& operator[](int x) const { return at(x); }

    const std::vector<Rat>& weights() const { return w_; }

    friend bool operator==(const Measure& a, const Measure& b) { return a.w_ == b.w_; }
    friend bool operator!=(const Measure& a, const Measure& b) { return !(a == b); }

private:
    std::vector<Rat> w_;
};

inline Measure point_mass(int x, int n) {
    if (n < 1) throw Error(Errc::dimension_mismatch, "state space must be nonempty");
    if (x < 0 || x >= n) throw Error(Errc::index_out_of_range, "point mass site out of range");
    std::vector<Rat> w(static_cast<size_t>(n), Rat(0));
    w[static_cast<size_t>(x)] = Rat(1);
    return Measure::unchecked(std::move(w));
}

inline Measure uniform_measure(int n) {
    if (n < 1) throw Error(Errc::dimension_mismatch, "state space must be nonempty");
    return Measure::unchecked(std::vector<Rat>(static_cast<size_t>(n), Rat(1, n)));
}

inline Rat measure_of_set(const Measure& m, const EventSet& a) {
    if (a.ambient_size() != m.size())
        throw Error(Errc::dimension_mismatch, "event set over a different state space");
    Rat total(0);
    for (int x : a.members()) total += m[x];
    return total;
}

// nu(. | b): renormalized restriction.  Rejects conditioning on a null event.
inline Measure conditional_measure(const Measure& nu, const EventSet& b) {
    Rat mass = measure_of_set(nu, b);
    if (mass.is_zero()) throw Error(Errc::zero_mass_event, "conditioning event has measure zero");
    std::vector<Rat> w(static_cast<size_t>(nu.size()), Rat(0));
    for (int x : b.members()) w[static_cast<size_t>(x)] = nu[x] / mass;
    return Measure::unchecked(std::move(w));
}

inline EventSet support(const Measure& m) {
    EventSet s(m.size());
    for (int x = 0; x < m.size(); ++x)
        if (!m[x].is_zero()) s.add(x);
    return s;
}

}  // namespace rcdkit
