#pragma once

#include <initializer_list>
#include <vector>

#include "rcdkit/errors.hpp"

namespace rcdkit {

// Subset of the state space {0, ..., n-1}, carrying its ambient size.
class EventSet {
public:
    EventSet() : n_(0) {}
    explicit EventSet(int n) : n_(n), bits_(static_cast<size_t>(n), false) {}

    static EventSet full(int n) {
        EventSet s(n);
        s.bits_.assign(static_cast<size_t>(n), true);
        return s;
    }

    static EventSet of(int n, std::initializer_list<int> xs) {
        EventSet s(n);
        for (int x : xs) s.add(x);
        return s;
    }

    static EventSet from_indices(int n, const std::vector<int>& xs) {
        EventSet s(n);
        for (int x : xs) s.add(x);
        return s;
    }

    int ambient_size() const { return n_; }

    bool contains(int x) const {
        check_index(x);
        return bits_[static_cast<size_t>(x)];
    }

    void add(int x) {
        check_index(x);
        bits_[static_cast<size_t>(x)] = true;
    }

    void remove(int x) {
        check_index(x);
        bits_[static_cast<size_t>(x)] = false;
    }

    int count() const {
        int c = 0;
        for (bool b : bits_) c += b ? 1 : 0;
        return c;
    }

    bool empty() const { return count() == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < n_; ++i)
            if (bits_[static_cast<size_t>(i)]) out.push_back(i);
        return out;
    }

    // -1 when empty; used for the canonical block order.
    int min_member() const {
        for (int i = 0; i < n_; ++i)
            if (bits_[static_cast<size_t>(i)]) return i;
        return -1;
    }

    EventSet complement() const {
        EventSet s(n_);
        for (int i = 0; i < n_; ++i) s.bits_[static_cast<size_t>(i)] = !bits_[static_cast<size_t>(i)];
        return s;
    }

    EventSet intersect(const EventSet& o) const {
        check_same(o);
        EventSet s(n_);
        for (int i = 0; i < n_; ++i)
            s.bits_[static_cast<size_t>(i)] = bits_[static_cast<size_t>(i)] && o.bits_[static_cast<size_t>(i)];
        return s;
    }

    EventSet unite(const EventSet& o) const {
        check_same(o);
        EventSet s(n_);
        for (int i = 0; i < n_; ++i)
            s.bits_[static_cast<size_t>(i)] = bits_[static_cast<size_t>(i)] || o.bits_[static_cast<size_t>(i)];
        return s;
    }

    bool subset_of(const EventSet& o) const {
        check_same(o);
        for (int i = 0; i < n_; ++i)
            if (bits_[static_cast<size_t>(i)] && !o.bits_[static_cast<size_t>(i)]) return false;
        return true;
    }

    bool intersects(const EventSet& o) const {
        check_same(o);
        for (int i = 0; i < n_; ++i)
            if (bits_[static_cast<size_t>(i)] && o.bits_[static_cast<size_t>(i)]) return true;
        return false;
    }

    friend bool operator==(const EventSet& a, const EventSet& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const EventSet& a, const EventSet& b) { return !(a == b); }
    friend bool operator<(const EventSet& a, const EventSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.bits_ < b.bits_;
    }

private:
    void check_index(int x) const {
        if (x < 0 || x >= n_) throw Error(Errc::index_out_of_range, "state index out of range");
    }
    void check_same(const EventSet& o) const {
        if (n_ != o.n_) throw Error(Errc::dimension_mismatch, "event sets over different state spaces");
    }

    int n_;
    std::vector<bool> bits_;
};

}  // namespace rcdkit
