#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace scac {

/// Membership bitmap over Z_L. Bit x is set iff residue x is in the set.
///
/// Disjointness of difference sets is the hot test in every validator and in
/// the exhaustive search, so the storage is a flat word array and
/// intersection is a word-wise AND.
class ResidueSet {
public:
    using word_type = std::uint64_t;
    static constexpr int word_bits = 64;

    ResidueSet() = default;
    explicit ResidueSet(int length)
        : length_(length), words_(static_cast<std::size_t>(word_count(length)), 0) {
        if (length < 1) throw std::invalid_argument("ResidueSet: length must be positive");
    }

    static constexpr int word_count(int length) { return (length + word_bits - 1) / word_bits; }

    template <class Range>
    static ResidueSet from(int length, const Range& residues) {
        ResidueSet s(length);
        for (auto x : residues) s.insert(static_cast<int>(x));
        return s;
    }

    int length() const { return length_; }
    const std::vector<word_type>& words() const { return words_; }

    bool contains(int x) const {
        if (x < 0 || x >= length_) return false;
        return (words_[x / word_bits] >> (x % word_bits)) & 1U;
    }

    void insert(int x) {
        check(x);
        words_[x / word_bits] |= word_type{1} << (x % word_bits);
    }

    void erase(int x) {
        check(x);
        words_[x / word_bits] &= ~(word_type{1} << (x % word_bits));
    }

    int size() const {
        int n = 0;
        for (auto w : words_) n += std::popcount(w);
        return n;
    }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
    }

    bool intersects(const ResidueSet& other) const {
        same_length(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    /// Smallest residue in both sets, if any.
    std::optional<int> first_common(const ResidueSet& other) const {
        same_length(other);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (auto w = words_[i] & other.words_[i])
                return static_cast<int>(i) * word_bits + std::countr_zero(w);
        }
        return std::nullopt;
    }

    ResidueSet& operator|=(const ResidueSet& other) {
        same_length(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    ResidueSet& operator&=(const ResidueSet& other) {
        same_length(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    friend ResidueSet operator|(ResidueSet a, const ResidueSet& b) { return a |= b; }
    friend ResidueSet operator&(ResidueSet a, const ResidueSet& b) { return a &= b; }

    /// Complement within Z_L.
    ResidueSet complement() const {
        ResidueSet out(length_);
        for (int x = 0; x < length_; ++x)
            if (!contains(x)) out.insert(x);
        return out;
    }

    /// {x + k mod L : x in this}.
    ResidueSet shifted(int k) const {
        ResidueSet out(length_);
        int step = ((k % length_) + length_) % length_;
        for_each([&](int x) { out.insert((x + step) % length_); });
        return out;
    }

    /// {-x mod L : x in this}.
    ResidueSet negated() const {
        ResidueSet out(length_);
        for_each([&](int x) { out.insert((length_ - x) % length_); });
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            for (auto w = words_[i]; w != 0; w &= w - 1)
                f(static_cast<int>(i) * word_bits + std::countr_zero(w));
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](int x) { out.push_back(x); });
        return out;
    }

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    void check(int x) const {
        if (x < 0 || x >= length_) throw std::out_of_range("ResidueSet: residue out of range");
    }
    void same_length(const ResidueSet& other) const {
        if (other.length_ != length_) throw std::invalid_argument("ResidueSet: length mismatch");
    }

    int length_ = 0;
    std::vector<word_type> words_;
};

}  // namespace scac
