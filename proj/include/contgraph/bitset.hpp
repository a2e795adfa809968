#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace contgraph {

/// Fixed-size dynamic bitset used by the branch-and-bound engines.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_(static_cast<std::size_t>((size + 63) / 64), 0) {}

    int size() const { return size_; }

    void set(int i) { words_[static_cast<std::size_t>(i) >> 6] |= bit(i); }
    void reset(int i) { words_[static_cast<std::size_t>(i) >> 6] &= ~bit(i); }
    bool test(int i) const { return (words_[static_cast<std::size_t>(i) >> 6] & bit(i)) != 0; }

    void set_all()
    {
        for (auto& w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Index of the lowest set bit at or after `from`, or -1.
    int next(int from = 0) const
    {
        if (from >= size_)
            return -1;
        std::size_t wi = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi >= words_.size())
                return -1;
            w = words_[wi];
        }
    }

    bool intersects(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    int count_and(const Bitset& o) const
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    /// this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                f(static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

private:
    static std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

    void trim()
    {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace contgraph
