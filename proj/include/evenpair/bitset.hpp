#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace evenpair {

// Fixed-size dense bit row. Adjacency rows and candidate sets in the
// exhaustive searches are all expressed through this; n stays small
// enough that word-parallel scans beat anything fancier.
class Bitset64 {
public:
    Bitset64() = default;
    explicit Bitset64(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear()
    {
        for (auto& w : words_)
            w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool any() const { return !none(); }

    Bitset64& operator&=(const Bitset64& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    Bitset64& operator|=(const Bitset64& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    void setminus_with(const Bitset64& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
    }

    bool intersects(const Bitset64& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bitset64& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    // index of the first set bit at or after i, or size() if none
    std::size_t next(std::size_t i) const
    {
        if (i >= n_)
            return n_;
        std::size_t w = i >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur != 0)
                return (w << 6) + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w == words_.size())
                return n_;
            cur = words_[w];
        }
    }

    std::size_t first() const { return next(0); }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t i = first(); i < n_; i = next(i + 1))
            fn(i);
    }

    friend bool operator==(const Bitset64&, const Bitset64&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace evenpair
