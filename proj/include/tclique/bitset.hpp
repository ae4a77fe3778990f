#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace tclique {

/// Fixed-width bit row used for adjacency. All binary operators require both
/// operands to have the same width.
class Bitset
{
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void set(std::size_t i, bool value) noexcept { value ? set(i) : reset(i); }

    void set_all() noexcept
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }
    void reset_all() noexcept
    {
        for (auto & w : words_)
            w = 0;
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const noexcept
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }
    bool none() const noexcept { return ! any(); }

    bool intersects(const Bitset & other) const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    std::size_t find_first() const noexcept { return scan_from(0); }
    std::size_t find_next(std::size_t i) const noexcept { return i + 1 >= bits_ ? npos : scan_from(i + 1); }

    Bitset & operator&=(const Bitset & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset & operator|=(const Bitset & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset & operator-=(const Bitset & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset & b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset & b) noexcept { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset & b) noexcept { return a -= b; }
    friend bool operator==(const Bitset &, const Bitset &) = default;

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            auto w = words_[wi];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(wi * 64 + bit);
                w &= w - 1;
            }
        }
    }

    const std::vector<std::uint64_t> & words() const noexcept { return words_; }

private:
    std::size_t scan_from(std::size_t i) const noexcept
    {
        std::size_t wi = i >> 6;
        if (wi >= words_.size())
            return npos;
        auto w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w)
                return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }

    void trim() noexcept
    {
        if (bits_ & 63)
            words_.back() &= (std::uint64_t{1} << (bits_ & 63)) - 1;
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace tclique
