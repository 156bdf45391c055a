#pragma once

#include <span>
#include <string>
#include <vector>

#include "dold/numtheory.hpp"
#include "dold/sequence.hpp"
#include "dold/types.hpp"

// Periodic expansion of arithmetic functions and the correspondence between
// Dold coefficients and root spectra of quasi-unipotent surface maps.
namespace dold::core {

namespace nt = dold::numtheory;

/// Coefficients of the periodic expansion psi(n) = sum_k a_k reg_k(n),
/// a_k = (1/k) sum_{d | k} mu(k/d) psi(d), for a sequence given at n = 1..N.
/// Values are exact rationals; integrality is the Dold congruence condition.
inline std::vector<Rational> dold_coefficients(std::span<const Integer> values) {
    if (values.empty()) throw DomainError("dold_coefficients: empty input");
    std::vector<Rational> out;
    out.reserve(values.size());
    for (Index k = 1; k <= values.size(); ++k) {
        Integer sum = 0;
        for (Index d : nt::divisors(k)) {
            const int mu = nt::mobius(k / d);
            if (mu != 0) sum += mu * values[d - 1];
        }
        out.emplace_back(sum, Integer(k));
    }
    return out;
}

/// psi(n) = sum_k a_k reg_k(n) = sum_{d | n} d a_d.
inline Integer evaluate_expansion(const DoldSequence& a, Index n) {
    if (n == 0) throw DomainError("evaluate_expansion: n must be positive");
    Integer sum = 0;
    for (Index d : nt::divisors(n))
        if (const Integer ad = a[d]; ad != 0) sum += ad * d;
    return sum;
}

/// True iff sum_{k | n} mu(n/k) psi(k) is divisible by n for every n <= N.
inline bool check_dold_congruences(std::span<const Integer> values) {
    if (values.empty()) throw DomainError("check_dold_congruences: empty input");
    for (Index n = 1; n <= values.size(); ++n) {
        Integer sum = 0;
        for (Index k : nt::divisors(n)) {
            const int mu = nt::mobius(n / k);
            if (mu != 0) sum += mu * values[k - 1];
        }
        if (sum % n != 0) return false;
    }
    return true;
}

/// a_1 = 2 - sum_k mu(k) r_k and a_n = -sum_{n | k} mu(k/n) r_k for n >= 2.
/// Purely formal: r may have negative entries.
inline DoldSequence spectrum_to_dold(const RootSpectrum& r) {
    // With m_1 = 2 - r_1 and m_k = -r_k, a_n = sum_{n | k} mu(k/n) m_k.
    DoldSequence a;
    auto spread = [&a](Index k, const Integer& m) {
        for (Index n : nt::divisors(k))
            if (const int mu = nt::mobius(k / n); mu != 0) a.add(n, mu * m);
    };
    spread(1, Integer(2) - r[1]);
    for (const auto& [k, rk] : r)
        if (k != 1) spread(k, -rk);
    return a;
}

/// r_1 = 2 - sum_n a_n and r_k = -sum_n a_{kn} for k >= 2.
inline RootSpectrum dold_to_spectrum(const DoldSequence& a) {
    // m_k = sum_n a_{kn}: every a_n contributes to each divisor k of n.
    RootSpectrum m;
    for (const auto& [n, an] : a)
        for (Index k : nt::divisors(n)) m.add(k, an);
    RootSpectrum r;
    r.set(1, Integer(2) - m[1]);
    for (const auto& [k, mk] : m)
        if (k != 1) r.set(k, -mk);
    return r;
}

enum class ViolationKind { negative, odd };

struct Violation {
    Index k;
    ViolationKind kind;
    Integer value;

    std::string describe() const {
        return "r_" + std::to_string(k) + " = " + value.str() +
               (kind == ViolationKind::negative ? " negative" : " odd");
    }

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct Realizability {
    bool realizable = true;
    std::vector<Violation> violations;

    explicit operator bool() const { return realizable; }
};

/// A spectrum is realized by an orientation-preserving surface homeomorphism
/// iff every r_k >= 0 and r_1, r_2 are even.
inline Realizability check_spectrum(const RootSpectrum& r) {
    Realizability out;
    for (const auto& [k, rk] : r) {
        if (rk < 0) out.violations.push_back({k, ViolationKind::negative, rk});
        if ((k == 1 || k == 2) && rk % 2 != 0) out.violations.push_back({k, ViolationKind::odd, rk});
    }
    out.realizable = out.violations.empty();
    return out;
}

inline Realizability is_realizable(const DoldSequence& a) { return check_spectrum(dold_to_spectrum(a)); }

/// Twice the genus: sum_k r_k phi(k).
inline Integer twice_genus(const RootSpectrum& r) {
    Integer total = 0;
    for (const auto& [k, rk] : r) total += rk * nt::totient(k);
    return total;
}

/// Genus of the surface carrying spectrum r, (sum_k r_k phi(k)) / 2.
inline Integer genus_of(const RootSpectrum& r) {
    for (const auto& [k, rk] : r)
        if (rk < 0) throw DomainError("genus_of: negative multiplicity r_" + std::to_string(k));
    const Integer total = twice_genus(r);
    if (total % 2 != 0) throw ConstructionError("genus_of: odd total dimension " + total.str());
    // Same quantity through the Dold side: 2g = 2 - sum_n n a_n.
    Integer check = 2;
    for (const auto& [n, an] : spectrum_to_dold(r)) check -= an * n;
    if (check != total) throw ConstructionError("genus_of: inconsistent genus formulas");
    return total / 2;
}

/// L(f^n) = 2 - sum_k r_k c_k(n).
inline Integer lefschetz_of(const RootSpectrum& r, Index n) {
    if (n == 0) throw DomainError("lefschetz_of: n must be positive");
    Integer value = 2;
    for (const auto& [k, rk] : r) value -= rk * nt::ramanujan_sum(k, n);
    return value;
}

/// Lefschetz numbers of iterates as a function of n. Periodic with period
/// lcm(support), 1 for the empty spectrum.
class LefschetzView {
public:
    explicit LefschetzView(RootSpectrum spectrum) : spectrum_(std::move(spectrum)) {
        for (Index k : spectrum_.support()) period_ = nt::lcm(period_, k);
    }

    const RootSpectrum& spectrum() const { return spectrum_; }
    Index period() const { return period_; }
    Integer operator()(Index n) const { return lefschetz_of(spectrum_, n); }

    /// Values for n = 1..count.
    std::vector<Integer> values(Index count) const {
        std::vector<Integer> out;
        out.reserve(count);
        for (Index n = 1; n <= count; ++n) out.push_back((*this)(n));
        return out;
    }

private:
    RootSpectrum spectrum_;
    Index period_ = 1;
};

/// Support of a, optionally restricted to odd indices (the minimal set of
/// Lefschetz periods).
inline APSet algebraic_periods(const DoldSequence& a, bool odd_only = false) {
    std::vector<Index> out;
    for (const auto& [n, an] : a)
        if (!odd_only || n % 2 == 1) out.push_back(n);
    return APSet(std::move(out));
}

enum class BoundKind { odd_exact, even_pair };

inline const char* to_string(BoundKind kind) { return kind == BoundKind::odd_exact ? "odd-exact" : "even-pair"; }

struct PeriodBound {
    Index n;
    BoundKind kind;
    Integer bound;

    friend bool operator==(const PeriodBound&, const PeriodBound&) = default;
};

using PeriodBoundReport = std::vector<PeriodBound>;

/// Lower bounds for any transversal map in the homotopy class: at least |a_n|
/// points of minimal period n for odd n, of minimal period n or n/2 for even n.
inline PeriodBoundReport periodic_point_bounds(const DoldSequence& a) {
    PeriodBoundReport out;
    for (const auto& [n, an] : a)
        out.push_back({n, n % 2 == 1 ? BoundKind::odd_exact : BoundKind::even_pair, abs(an)});
    return out;
}

}  // namespace dold::core
