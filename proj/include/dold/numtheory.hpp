#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <vector>

#include "dold/polynomial.hpp"
#include "dold/types.hpp"

// Elementary number theory over positive indices: Moebius function, Euler
// totient and its preimages, divisors, Ramanujan sums, the periodic basis
// functions reg_k and cyclotomic polynomials.
namespace dold::numtheory {

namespace detail {

inline void require_positive(Index n, const char* what) {
    if (n == 0) throw DomainError(std::string(what) + ": argument must be positive");
}

// Prime factorization by trial division, (prime, exponent) ascending.
inline std::vector<std::pair<Index, unsigned>> factorize(Index n) {
    std::vector<std::pair<Index, unsigned>> out;
    for (Index p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline bool is_prime(Index n) {
    if (n < 2) return false;
    for (Index p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

}  // namespace detail

inline int mobius(Index n) {
    detail::require_positive(n, "mobius");
    int sign = 1;
    for (auto [p, e] : detail::factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline Index totient(Index n) {
    detail::require_positive(n, "totient");
    Index result = n;
    for (auto [p, e] : detail::factorize(n)) result = result / p * (p - 1);
    return result;
}

inline std::vector<Index> divisors(Index n) {
    detail::require_positive(n, "divisors");
    std::vector<Index> low, high;
    for (Index d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

inline Index lcm(Index a, Index b) { return a / std::gcd(a, b) * b; }

namespace detail {

// All m built from primes primes[i..] (each prime at most once, any power)
// with phi(m) == n, multiplied by `acc`.
inline void inverse_totient_rec(Index n, const std::vector<Index>& primes, std::size_t i, Index acc,
                                std::vector<Index>& out) {
    if (n == 1) out.push_back(acc);
    for (std::size_t j = i; j < primes.size(); ++j) {
        const Index p = primes[j];
        if (n % (p - 1) != 0) continue;
        Index rest = n / (p - 1);
        Index pk = p;
        for (;;) {
            inverse_totient_rec(rest, primes, j + 1, acc * pk, out);
            if (rest % p != 0) break;
            rest /= p;
            pk *= p;
        }
    }
}

}  // namespace detail

/// All m with totient(m) == n, ascending. Any such m is a product of prime
/// powers p^e with (p - 1) | n, so only primes p with p - 1 dividing n are
/// candidates and the search is a finite recursion over them.
inline std::vector<Index> inverse_totient(Index n) {
    detail::require_positive(n, "inverse_totient");
    std::vector<Index> primes;
    for (Index d : divisors(n))
        if (detail::is_prime(d + 1)) primes.push_back(d + 1);
    std::vector<Index> out;
    detail::inverse_totient_rec(n, primes, 0, 1, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Sum of the n-th powers of the primitive k-th roots of unity,
/// c_k(n) = sum over d | gcd(k, n) of mu(k/d) * d.
inline Integer ramanujan_sum(Index k, Index n) {
    detail::require_positive(k, "ramanujan_sum");
    detail::require_positive(n, "ramanujan_sum");
    Integer sum = 0;
    for (Index d : divisors(std::gcd(k, n))) sum += Integer(mobius(k / d)) * d;
    return sum;
}

// reg_k(n) = k if k | n, 0 otherwise.
inline Integer reg(Index k, Index n) {
    detail::require_positive(k, "reg");
    detail::require_positive(n, "reg");
    return n % k == 0 ? Integer(k) : Integer(0);
}

/// k-th cyclotomic polynomial, x^k - 1 divided exactly by the cyclotomic
/// polynomials of the proper divisors of k. Results are cached per process.
inline IntPolynomial cyclotomic(Index k) {
    detail::require_positive(k, "cyclotomic");
    static std::shared_mutex mutex;
    static std::map<Index, IntPolynomial> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    IntPolynomial p = IntPolynomial::monomial(1, k) - IntPolynomial{1};
    for (Index d : divisors(k)) {
        if (d == k) continue;
        auto [q, r] = p.divmod_monic(cyclotomic(d));
        if (!r.is_zero()) throw ConstructionError("cyclotomic: inexact division");
        p = std::move(q);
    }
    std::unique_lock lock(mutex);
    return cache.emplace(k, std::move(p)).first->second;
}

}  // namespace dold::numtheory
