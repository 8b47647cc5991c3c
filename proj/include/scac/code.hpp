#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "codeword.hpp"

namespace scac {

/// A set of codewords sharing length L and weight w.
class Code {
public:
    Code() = default;

    Code(int length, int weight, std::vector<Codeword> codewords)
        : length_(length), weight_(weight), codewords_(std::move(codewords)) {
        if (length_ < 1) throw std::invalid_argument("code length must be positive");
        if (weight_ < 1 || weight_ > length_) throw std::invalid_argument("code weight must lie in [1, L]");
        for (const auto& cw : codewords_) {
            if (cw.length() != length_)
                throw std::invalid_argument("codeword " + to_string(cw) + " does not have length " +
                                            std::to_string(length_));
            if (cw.weight() != weight_)
                throw std::invalid_argument("codeword " + to_string(cw) + " does not have weight " +
                                            std::to_string(weight_));
        }
        auto sorted = codewords_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("codewords must be pairwise distinct");
    }

    /// Builds a code from element lists, e.g. `Code::of(28, {{0,2,4},{0,7,14}})`.
    static Code of(int length, const std::vector<std::vector<int>>& elements) {
        if (elements.empty()) throw std::invalid_argument("Code::of needs at least one codeword");
        std::vector<Codeword> cws;
        for (const auto& e : elements) cws.emplace_back(length, e);
        return {length, cws.front().weight(), std::move(cws)};
    }

    int length() const { return length_; }
    int weight() const { return weight_; }
    std::size_t size() const { return codewords_.size(); }
    bool empty() const { return codewords_.empty(); }
    const std::vector<Codeword>& codewords() const { return codewords_; }
    const Codeword& operator[](std::size_t i) const { return codewords_[i]; }

    friend bool operator==(const Code&, const Code&) = default;

private:
    int length_ = 0;
    int weight_ = 0;
    std::vector<Codeword> codewords_;
};

inline std::string to_string(const Code& code) {
    std::string s = "{";
    for (std::size_t i = 0; i < code.size(); ++i) {
        if (i) s += ',';
        s += '{';
        const auto& e = code[i].elements();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(e[k]);
        }
        s += '}';
    }
    s += "}@" + std::to_string(code.length());
    return s;
}

}  // namespace scac
