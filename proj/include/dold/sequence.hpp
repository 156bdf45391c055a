#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "dold/types.hpp"

namespace dold {

/// Finitely supported integer sequence indexed by positive integers.
/// Entries are kept sorted by index and zero values are never stored, so two
/// sequences compare equal iff they agree at every index.
///
/// The tag parameter only separates otherwise identical sequence kinds
/// (Dold coefficients vs. root multiplicities) at the type level.
template <typename Tag>
class SparseSequence {
public:
    using Entry = std::pair<Index, Integer>;

    SparseSequence() = default;

    SparseSequence(std::initializer_list<std::pair<Index, long long>> init) {
        for (const auto& [n, v] : init) add(n, Integer(v));
    }

    /// Builds from a dense list where position i holds the value at index i + 1.
    template <typename V>
    static SparseSequence from_dense(const std::vector<V>& dense) {
        SparseSequence s;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (dense[i] != 0) s.entries_.emplace_back(i + 1, Integer(dense[i]));
        return s;
    }

    Integer operator[](Index n) const {
        auto it = find(n);
        return it != entries_.end() && it->first == n ? it->second : Integer(0);
    }

    void set(Index n, Integer value) {
        if (n == 0) throw DomainError("sequence index must be positive");
        auto it = find(n);
        const bool present = it != entries_.end() && it->first == n;
        if (value == 0) {
            if (present) entries_.erase(it);
        } else if (present) {
            it->second = std::move(value);
        } else {
            entries_.emplace(it, n, std::move(value));
        }
    }

    void add(Index n, const Integer& delta) {
        if (delta != 0) set(n, (*this)[n] + delta);
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    // Largest index with a nonzero value, 0 when empty.
    Index horizon() const { return entries_.empty() ? 0 : entries_.back().first; }

    std::vector<Index> support() const {
        std::vector<Index> out;
        out.reserve(entries_.size());
        for (const auto& e : entries_) out.push_back(e.first);
        return out;
    }

    /// Values at indices 1..horizon().
    std::vector<Integer> dense() const {
        std::vector<Integer> out(horizon());
        for (const auto& [n, v] : entries_) out[n - 1] = v;
        return out;
    }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const SparseSequence&, const SparseSequence&) = default;

private:
    typename std::vector<Entry>::iterator find(Index n) {
        return std::lower_bound(entries_.begin(), entries_.end(), n,
                                [](const Entry& e, Index key) { return e.first < key; });
    }
    typename std::vector<Entry>::const_iterator find(Index n) const {
        return std::lower_bound(entries_.begin(), entries_.end(), n,
                                [](const Entry& e, Index key) { return e.first < key; });
    }

    std::vector<Entry> entries_;
};

struct DoldTag {};
struct SpectrumTag {};

/// Dold coefficients a_n; the support is the set of algebraic periods.
using DoldSequence = SparseSequence<DoldTag>;

/// Root spectrum: r_k is how many times the full set of primitive k-th
/// roots of unity occurs among the eigenvalues.
using RootSpectrum = SparseSequence<SpectrumTag>;

/// Multiset view of a non-negative spectrum: k repeated r_k times, ascending.
inline std::vector<Index> as_multiset(const RootSpectrum& r) {
    std::vector<Index> out;
    for (const auto& [k, m] : r) {
        if (m < 0) throw DomainError("as_multiset: negative multiplicity at k = " + std::to_string(k));
        for (Integer i = 0; i < m; ++i) out.push_back(k);
    }
    return out;
}

inline RootSpectrum from_multiset(const std::vector<Index>& elements) {
    RootSpectrum r;
    for (Index k : elements) r.add(k, 1);
    return r;
}

/// Finite set of positive integers, kept sorted and duplicate-free.
class APSet {
public:
    APSet() = default;
    APSet(std::initializer_list<Index> init) : APSet(std::vector<Index>(init)) {}
    explicit APSet(std::vector<Index> elements) : elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    }

    const std::vector<Index>& elements() const { return elements_; }
    bool empty() const { return elements_.empty(); }
    std::size_t size() const { return elements_.size(); }
    bool contains(Index n) const { return std::binary_search(elements_.begin(), elements_.end(), n); }
    Index min() const { return elements_.front(); }
    Index max() const { return elements_.back(); }

    APSet odd_part() const {
        APSet out;
        for (Index n : elements_)
            if (n % 2 == 1) out.elements_.push_back(n);
        return out;
    }

    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    friend bool operator==(const APSet&, const APSet&) = default;
    friend auto operator<=>(const APSet&, const APSet&) = default;

private:
    std::vector<Index> elements_;
};

}  // namespace dold
