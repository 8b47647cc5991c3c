#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace scac {

/// A w-subset of Z_L, stored sorted ascending.
class Codeword {
public:
    Codeword() = default;

    /// Elements may be given in any order; they are sorted. Throws on
    /// duplicates or residues outside [0, L-1].
    Codeword(int length, std::vector<int> elements) : length_(length), elements_(std::move(elements)) {
        if (length_ < 1) throw std::invalid_argument("codeword length must be positive");
        if (elements_.empty()) throw std::invalid_argument("codeword must have at least one element");
        std::sort(elements_.begin(), elements_.end());
        if (elements_.front() < 0 || elements_.back() >= length_)
            throw std::invalid_argument("codeword element out of range [0, L-1]");
        if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
            throw std::invalid_argument("codeword elements must be distinct");
    }

    int length() const { return length_; }
    int weight() const { return static_cast<int>(elements_.size()); }
    const std::vector<int>& elements() const { return elements_; }
    int operator[](std::size_t i) const { return elements_[i]; }

    /// I + {c}.
    Codeword translated(int c) const {
        std::vector<int> out;
        out.reserve(elements_.size());
        for (int x : elements_) out.push_back(mod(x + c));
        return {length_, std::move(out)};
    }

    /// -I.
    Codeword reflected() const {
        std::vector<int> out;
        out.reserve(elements_.size());
        for (int x : elements_) out.push_back(mod(-x));
        return {length_, std::move(out)};
    }

    /// k*I, viewed in Z_{k*L}. Used by the doubling construction.
    Codeword scaled_into(int factor) const {
        std::vector<int> out;
        out.reserve(elements_.size());
        for (int x : elements_) out.push_back(x * factor);
        return {length_ * factor, std::move(out)};
    }

    friend bool operator==(const Codeword&, const Codeword&) = default;
    friend auto operator<=>(const Codeword& a, const Codeword& b) {
        if (auto c = a.length_ <=> b.length_; c != 0) return c;
        return a.elements_ <=> b.elements_;
    }

private:
    int mod(long long x) const { return static_cast<int>(((x % length_) + length_) % length_); }

    int length_ = 0;
    std::vector<int> elements_;
};

/// `{0,4,7}@26`
inline std::string to_string(const Codeword& cw) {
    std::string s = "{";
    for (std::size_t i = 0; i < cw.elements().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cw[i]);
    }
    s += "}@";
    s += std::to_string(cw.length());
    return s;
}

/// Parses the `{a,b,c}@L` text form. Whitespace around tokens is ignored.
inline Codeword parse_codeword(std::string_view text) {
    auto fail = [&]() -> Codeword {
        throw std::invalid_argument("malformed codeword '" + std::string(text) + "', expected {a,b,...}@L");
    };
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    auto open = compact.find('{');
    auto close = compact.find('}');
    if (open != 0 || close == std::string::npos || close + 1 >= compact.size() || compact[close + 1] != '@')
        return fail();

    auto parse_int = [&](std::string_view tok) {
        if (tok.empty()) fail();
        int v = 0;
        for (char ch : tok) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
            v = v * 10 + (ch - '0');
            if (v > 1'000'000'000 / 10) fail();
        }
        return v;
    };

    std::vector<int> elems;
    std::string_view body(compact.data() + 1, close - 1);
    while (!body.empty()) {
        auto comma = body.find(',');
        elems.push_back(parse_int(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty()) fail();
    }
    int length = parse_int(std::string_view(compact).substr(close + 2));
    return {length, std::move(elems)};
}

/// {0, g, 2g, ..., (w-1)g} mod L with generator 1 <= g <= L/2.
inline Codeword equi_codeword(int generator, int weight, int length) {
    if (length < 2 || weight < 1) throw std::invalid_argument("equi_codeword: need L >= 2 and w >= 1");
    if (generator < 1 || 2 * generator > length)
        throw std::invalid_argument("equi_codeword: generator must satisfy 1 <= g <= L/2");
    std::vector<int> elems;
    for (long long j = 0; j < weight; ++j) elems.push_back(static_cast<int>((j * generator) % length));
    auto sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("equi_codeword: generator " + std::to_string(generator) +
                                    " repeats elements for weight " + std::to_string(weight));
    return {length, std::move(elems)};
}

}  // namespace scac
