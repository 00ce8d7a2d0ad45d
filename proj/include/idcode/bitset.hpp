#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace idcode {

// Fixed-universe bitset over 64-bit words. Vertex sets are kept in this form
// so neighborhood algebra runs in O(n/64) per operation.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) { assert(n >= 0); }

    int universe() const { return n_; }

    bool test(int i) const {
        assert(0 <= i && i < n_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(0 <= i && i < n_);
        w_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(0 <= i && i < n_);
        w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (std::uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (std::uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit >= from, or -1.
    int next(int from = 0) const {
        if (from >= n_) return -1;
        if (from < 0) from = 0;
        int wi = from >> 6;
        std::uint64_t cur = w_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return (wi << 6) + std::countr_zero(cur);
            if (++wi == (int)w_.size()) return -1;
            cur = w_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    // Set difference: this \ o.
    Bitset& operator-=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }
    // Word-lexicographic order; usable as a map key for trace tables.
    bool operator<(const Bitset& o) const {
        assert(n_ == o.n_);
        return w_ < o.w_;
    }

    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace idcode
