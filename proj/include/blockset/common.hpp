#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace blockset {

// Bad user input or violated precondition. Maps to CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A check that can only fail if the library itself (or a theorem it relies
// on) is wrong. Maps to CLI exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg)
{
    if (!cond) throw input_error(msg);
}

inline void check_internal(bool cond, const std::string& msg)
{
    if (!cond) throw internal_error(msg);
}

// Dynamic bitset sized at construction. Word 0 holds bits 0..63.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }
    void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const
    {
        int c = 0;
        for (auto x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const
    {
        for (auto x : w_)
            if (x) return true;
        return false;
    }

    bool intersects(const Bitset& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int count_and(const Bitset& o) const
    {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += __builtin_popcountll(w_[i] & o.w_[i]);
        return c;
    }

    bool subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const { return w_ == o.w_; }

    // Order on equal-size sets that matches lexicographic order of the
    // sorted element lists: the set containing the smallest element of the
    // symmetric difference is the smaller one.
    bool set_less(const Bitset& o) const
    {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t d = w_[i] ^ o.w_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return (w_[i] & low) != 0;
            }
        }
        return false;
    }

    std::vector<int> to_indices() const
    {
        std::vector<int> out;
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

// Runs fn(i) for i in [0, n) on `threads` workers and keeps results in index
// order, so the output is identical for any worker count.
template <typename T, typename Fn>
std::vector<T> parallel_map(int n, int threads, Fn&& fn)
{
    std::vector<T> out(static_cast<std::size_t>(n));
    if (threads <= 1 || n < 2) {
        for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
    threads = std::min<int>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (int i = t; i < n; i += threads) out[static_cast<std::size_t>(i)] = fn(i);
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace blockset
