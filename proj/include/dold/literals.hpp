#pragma once

#include <cctype>
#include <limits>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "dold/sequence.hpp"
#include "dold/types.hpp"

// Text notation for sequences and sets:
//   spectrum  multiset "{1,1,6}" or pairs "1:2,6:1"
//   dold      dense tuple "(3,1,-1,-1)" or pairs "1:3,2:1,3:-1,4:-1"
//   sets      "{1,2,3}" or "{}"
// Whitespace is ignored everywhere.
namespace dold::literals {

namespace detail {

// Input with whitespace removed; keeps the original offset of every
// surviving character so errors point into the caller's string.
struct Cursor {
    std::string text;
    std::vector<std::size_t> origin;
    std::size_t pos = 0;
    std::size_t original_size = 0;

    explicit Cursor(std::string_view in) : original_size(in.size()) {
        for (std::size_t i = 0; i < in.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(in[i]))) continue;
            text.push_back(in[i]);
            origin.push_back(i);
        }
    }

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    std::size_t where() const { return done() ? original_size : origin[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, where()); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    Integer integer() {
        const std::size_t start = pos;
        const bool negative = accept('-');
        const std::size_t digits = pos;
        Integer value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (text[pos++] - '0');
        if (pos == digits) {
            pos = start;
            fail("expected integer");
        }
        return negative ? Integer(-value) : value;
    }

    Index index() {
        const std::size_t start = pos;
        const Integer v = integer();
        if (v <= 0 || v > Integer(std::numeric_limits<Index>::max())) {
            pos = start;
            fail("expected positive index");
        }
        return static_cast<Index>(v);
    }

    void finish() {
        if (!done()) fail("unexpected trailing input");
    }
};

template <typename Tag>
SparseSequence<Tag> parse_pairs(Cursor& c) {
    SparseSequence<Tag> out;
    std::vector<Index> seen;
    do {
        const std::size_t at = c.pos;
        const Index n = c.index();
        for (Index s : seen)
            if (s == n) {
                c.pos = at;
                c.fail("duplicate index " + std::to_string(n));
            }
        seen.push_back(n);
        c.expect(':');
        out.set(n, c.integer());
    } while (c.accept(','));
    return out;
}

}  // namespace detail

/// Root spectrum from "{k,k,...}" (multiset) or "k:r,..." (pairs); the empty
/// string and "{}" give the empty spectrum.
inline RootSpectrum parse_spectrum(std::string_view in) {
    detail::Cursor c(in);
    if (c.done()) return {};
    RootSpectrum out;
    if (c.accept('{')) {
        if (!c.accept('}')) {
            do {
                out.add(c.index(), 1);
            } while (c.accept(','));
            c.expect('}');
        }
    } else {
        out = detail::parse_pairs<SpectrumTag>(c);
    }
    c.finish();
    return out;
}

/// Dold sequence from "(a_1,...,a_K)" (dense) or "n:a,..." (pairs); the empty
/// string and "()" give the zero sequence.
inline DoldSequence parse_dold(std::string_view in) {
    detail::Cursor c(in);
    if (c.done()) return {};
    DoldSequence out;
    if (c.accept('(')) {
        if (!c.accept(')')) {
            Index n = 1;
            do {
                out.set(n++, c.integer());
            } while (c.accept(','));
            c.expect(')');
        }
    } else {
        out = detail::parse_pairs<DoldTag>(c);
    }
    c.finish();
    return out;
}

/// Set of positive integers from "{1,2,3}"; braces are optional.
inline APSet parse_set(std::string_view in) {
    detail::Cursor c(in);
    const bool braced = c.accept('{');
    std::vector<Index> elements;
    if (!c.done() && !(braced && c.peek() == '}')) {
        do {
            elements.push_back(c.index());
        } while (c.accept(','));
    }
    if (braced) c.expect('}');
    c.finish();
    return APSet(std::move(elements));
}

template <typename Range>
std::string join(const Range& items, char open, char close) {
    std::string out(1, open);
    bool first = true;
    for (const auto& x : items) {
        if (!first) out += ',';
        first = false;
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Integer>)
            out += x.str();
        else
            out += std::to_string(x);
    }
    out += close;
    return out;
}

inline std::string format_set(const APSet& s) { return join(s.elements(), '{', '}'); }

/// "{1,1,6}"; requires non-negative multiplicities.
inline std::string format_multiset(const RootSpectrum& r) { return join(as_multiset(r), '{', '}'); }

template <typename Tag>
std::string format_pairs(const SparseSequence<Tag>& s) {
    std::string out;
    for (const auto& [n, v] : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(n) + ":" + v.str();
    }
    return out;
}

/// "(a_1,...,a_K)" with K the horizon; "()" for the zero sequence.
inline std::string format_tuple(const DoldSequence& a) { return join(a.dense(), '(', ')'); }

/// Multiset notation when every multiplicity is non-negative, pairs otherwise.
inline std::string format_spectrum(const RootSpectrum& r) {
    for (const auto& e : r)
        if (e.second < 0) return format_pairs(r);
    return format_multiset(r);
}

}  // namespace dold::literals
