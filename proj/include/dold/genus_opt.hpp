#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "dold/doldcore.hpp"
#include "dold/numtheory.hpp"
#include "dold/parallel.hpp"
#include "dold/sequence.hpp"
#include "dold/spectra_enum.hpp"

// Minimal genus of a closed orientable surface on which a finite set of
// positive integers occurs as the set of algebraic periods (or as its odd
// part) of an orientation-preserving homeomorphism.
namespace dold::genus {

namespace nt = dold::numtheory;

struct GenusWitness {
    Index genus = 0;
    DoldSequence dold;
    RootSpectrum spectrum;

    friend bool operator==(const GenusWitness&, const GenusWitness&) = default;
};

inline GenusWitness make_witness(const RootSpectrum& r) {
    GenusWitness w;
    w.spectrum = r;
    w.dold = core::spectrum_to_dold(r);
    w.genus = static_cast<Index>(core::genus_of(r));
    return w;
}

namespace detail {

inline void require_query(const APSet& a, const char* who) {
    if (a.empty()) throw DomainError(std::string(who) + ": empty set");
    if (a.min() == 0) throw DomainError(std::string(who) + ": elements must be positive");
}

inline std::optional<Index> smallest_with_parity(const APSet& a, Index parity) {
    for (Index n : a)
        if (n % 2 == parity) return n;
    return std::nullopt;
}

// Tie-break among witnesses of equal genus: the lexicographically smallest
// ascending multiset.
inline bool better(const RootSpectrum& lhs, const RootSpectrum& rhs) { return as_multiset(lhs) < as_multiset(rhs); }

}  // namespace detail

/// Constructive bound: a_n = -1 on A, then one or two entries lowered to -2
/// to fix the parities of sum a_n and sum a_{2n}. The witness has support A
/// and 2g = 2 + sum(A) + n0 + n1.
inline GenusWitness upper_bound_genus(const APSet& a) {
    detail::require_query(a, "upper_bound_genus");
    DoldSequence seq;
    Index even_count = 0, sum = 0;
    for (Index n : a) {
        seq.set(n, -1);
        sum += n;
        if (n % 2 == 0) ++even_count;
    }
    const bool total_odd = a.size() % 2 == 1;   // sum_n a_n = -|A|
    const bool even_odd = even_count % 2 == 1;  // sum_n a_{2n} = -|A even|
    Index n0 = 0, n1 = 0;
    auto need = [&](Index parity) {
        auto v = detail::smallest_with_parity(a, parity);
        if (!v) throw ConstructionError("upper_bound_genus: parity fix index missing");
        return *v;
    };
    if (total_odd && even_odd) {
        n0 = need(0);
    } else if (total_odd) {
        n1 = need(1);
    } else if (even_odd) {
        n0 = need(0);
        n1 = need(1);
    }
    if (n0) seq.set(n0, -2);
    if (n1) seq.set(n1, -2);

    GenusWitness w;
    w.dold = seq;
    w.spectrum = core::dold_to_spectrum(seq);
    if (!core::check_spectrum(w.spectrum)) throw ConstructionError("upper_bound_genus: witness not realizable");
    w.genus = static_cast<Index>(core::genus_of(w.spectrum));
    if (2 * w.genus != 2 + sum + n0 + n1) throw ConstructionError("upper_bound_genus: genus formula mismatch");
    return w;
}

namespace detail {

// Depth-first search over spectra supported on the divisors of A, largest
// degree first. When r_k is fixed all multiples of k are already fixed, so
// a_k = -sum_{k | j} mu(j/k) r_j is final and must be nonzero exactly on A.
class ExactSearch {
public:
    ExactSearch(const APSet& target, Index budget) : target_(target), budget_(2 * budget) {
        std::vector<Index> div;
        for (Index n : target)
            for (Index d : nt::divisors(n)) div.push_back(d);
        std::sort(div.begin(), div.end(), std::greater<>());
        div.erase(std::unique(div.begin(), div.end()), div.end());
        degrees_ = div;
        values_.assign(div.size(), 0);
        for (std::size_t i = 0; i < div.size(); ++i) {
            std::vector<std::pair<std::size_t, int>> m;
            for (std::size_t j = 0; j < i; ++j)
                if (div[j] % div[i] == 0)
                    if (int mu = nt::mobius(div[j] / div[i]); mu != 0) m.emplace_back(j, mu);
            multiples_.push_back(std::move(m));
        }
    }

    std::vector<RootSpectrum> run() {
        search(0, budget_);
        return found_;
    }

private:
    // Coefficient a_k from the already fixed multiples and r_k itself.
    Integer coefficient(std::size_t i, const Integer& rk) const {
        Integer m = -rk;
        if (degrees_[i] == 1) m += 2;
        for (const auto& [j, mu] : multiples_[i]) {
            m -= mu * values_[j];
        }
        return m;
    }

    void search(std::size_t i, Index left) {
        const Index k = degrees_[i];
        const Index phi = nt::totient(k);
        const bool want = target_.contains(k);
        const bool last = i + 1 == degrees_.size();  // k == 1
        for (Index v = last ? left : 0; v * phi <= left; ++v) {
            if ((k == 1 || k == 2) && v % 2 != 0) continue;
            const Integer rk = v;
            const Integer ak = coefficient(i, rk);
            if ((ak != 0) != want) continue;
            values_[i] = rk;
            if (last) {
                RootSpectrum r;
                for (std::size_t j = 0; j < degrees_.size(); ++j) r.set(degrees_[j], values_[j]);
                found_.push_back(std::move(r));
            } else {
                search(i + 1, left - v * phi);
            }
            values_[i] = 0;
        }
    }

    const APSet& target_;
    Index budget_;
    std::vector<Index> degrees_;
    std::vector<Integer> values_;
    std::vector<std::vector<std::pair<std::size_t, int>>> multiples_;
    std::vector<RootSpectrum> found_;
};

}  // namespace detail

/// Smallest genus g >= 1 carrying a realizable Dold sequence whose support is
/// exactly A. Certified by exhaustive search at every genus up to the
/// constructive bound.
inline GenusWitness min_genus_exact(const APSet& a) {
    const Index bound = upper_bound_genus(a).genus;
    for (Index g = 1; g <= bound; ++g) {
        auto found = detail::ExactSearch(a, g).run();
        if (found.empty()) continue;
        auto best = std::min_element(found.begin(), found.end(), detail::better);
        GenusWitness w = make_witness(*best);
        if (w.genus != g || core::algebraic_periods(w.dold) != a)
            throw ConstructionError("min_genus_exact: witness does not match query");
        return w;
    }
    throw ConstructionError("min_genus_exact: no witness up to the constructive bound");
}

/// Smallest genus g >= 1 with a realizable Dold sequence whose odd support
/// is exactly A (even indices unconstrained). Scans the genus catalogs in
/// ascending order.
inline GenusWitness min_genus_odd(const APSet& a, unsigned workers = 1) {
    detail::require_query(a, "min_genus_odd");
    for (Index n : a)
        if (n % 2 == 0) throw DomainError("min_genus_odd: element " + std::to_string(n) + " is even");
    const Index bound = upper_bound_genus(a).genus;
    for (Index g = 1; g <= bound; ++g) {
        auto per_partition = enumeration::map_partitions(
            g, workers, [&a](const enumeration::PartUniverse& u, const std::vector<Index>& p) {
                std::optional<RootSpectrum> best;
                enumeration::for_each_spectrum_of_partition(u, p, [&](const RootSpectrum& r) {
                    if (core::algebraic_periods(core::spectrum_to_dold(r), true) != a) return;
                    if (!best || detail::better(r, *best)) best = r;
                });
                return best;
            });
        std::optional<RootSpectrum> best;
        for (auto& cand : per_partition)
            if (cand && (!best || detail::better(*cand, *best))) best = std::move(cand);
        if (best) return make_witness(*best);
    }
    throw ConstructionError("min_genus_odd: no witness up to the constructive bound");
}

}  // namespace dold::genus
