#pragma once

#include <utility>
#include <vector>

#include "rcdkit/errors.hpp"
#include "rcdkit/event_set.hpp"
#include "rcdkit/measure.hpp"
#include "rcdkit/rational.hpp"

namespace rcdkit {

// Probability kernel on {0, ..., n-1}: a row-stochastic n x n matrix.
// Row x is the distribution the kernel attaches to state x.
class Kernel {
public:
    Kernel() = default;

    explicit Kernel(std::vector<std::vector<Rat>> rows, const NumericMode& mode = {})
        : rows_(std::move(rows)) {
        size_t n = rows_.size();
        for (const auto& row : rows_) {
            if (row.size() != n) throw Error(Errc::dimension_mismatch, "kernel matrix is not square");
            Rat total(0);
            for (const Rat& v : row) {
                if (v.negative()) throw Error(Errc::not_a_probability, "negative kernel entry " + v.str());
                total += v;
            }
            if (!mode.is_one(total))
                throw Error(Errc::not_a_probability, "kernel row sums to " + total.str() + ", not 1");
        }
    }

    static Kernel unchecked(std::vector<std::vector<Rat>> rows) {
        Kernel k;
        k.rows_ = std::move(rows);
        return k;
    }

    static Kernel identity(int n) {
        std::vector<std::vector<Rat>> rows(static_cast<size_t>(n),
                                           std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
        for (int x = 0; x < n; ++x) rows[static_cast<size_t>(x)][static_cast<size_t>(x)] = Rat(1);
        return unchecked(std::move(rows));
    }

    // Every row equal to mu: the kernel that forgets its start state.
    static Kernel constant(const Measure& mu) {
        std::vector<std::vector<Rat>> rows(static_cast<size_t>(mu.size()), mu.weights());
        return unchecked(std::move(rows));
    }

    int size() const { return static_cast<int>(rows_.size()); }

    const std::vector<Rat>& row(int x) const {
        if (x < 0 || x >= size()) throw Error(Errc::index_out_of_range, "row index out of range");
        return rows_[static_cast<size_t>(x)];
    }

    const Rat& entry(int x, int y) const {
        const auto& r = row(x);
        if (y < 0 || y >= size()) throw Error(Errc::index_out_of_range, "column index out of range");
        return r[static_cast<size_t>(y)];
    }

    Measure row_measure(int x) const { return Measure::unchecked(row(x)); }

    // Mass row x gives to the event b.
    Rat row_mass(int x, const EventSet& b) const {
        if (b.ambient_size() != size())
            throw Error(Errc::dimension_mismatch, "event set over a different state space");
        Rat total(0);
        for (int y : b.members()) total += entry(x, y);
        return total;
    }

    friend bool operator==(const Kernel& a, const Kernel& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const Kernel& a, const Kernel& b) { return !(a == b); }

private:
    std::vector<std::vector<Rat>> rows_;
};

// Pushforward nu R: (nu R)(y) = sum_x nu(x) R(x, y).
inline Measure propagate(const Measure& nu, const Kernel& r) {
    if (nu.size() != r.size()) throw Error(Errc::dimension_mismatch, "measure/kernel size mismatch");
    int n = nu.size();
    std::vector<Rat> out(static_cast<size_t>(n), Rat(0));
    for (int x = 0; x < n; ++x) {
        if (nu[x].is_zero()) continue;
        for (int y = 0; y < n; ++y) out[static_cast<size_t>(y)] += nu[x] * r.entry(x, y);
    }
    return Measure::unchecked(std::move(out));
}

// Kernel composition (R Q)(x, z) = sum_y R(x, y) Q(y, z).
inline Kernel compose(const Kernel& r, const Kernel& q) {
    if (r.size() != q.size()) throw Error(Errc::dimension_mismatch, "kernel size mismatch");
    int n = r.size();
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(n),
                                       std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Rat& rxy = r.entry(x, y);
            if (rxy.is_zero()) continue;
            for (int z = 0; z < n; ++z) rows[static_cast<size_t>(x)][static_cast<size_t>(z)] += rxy * q.entry(y, z);
        }
    return Kernel::unchecked(std::move(rows));
}

}  // namespace rcdkit
