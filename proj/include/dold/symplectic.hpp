#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "dold/doldcore.hpp"
#include "dold/matrix.hpp"
#include "dold/numtheory.hpp"
#include "dold/polynomial.hpp"
#include "dold/sequence.hpp"

// Integer symplectic matrices with prescribed cyclotomic characteristic
// polynomial, assembled into realizations of arbitrary admissible root
// spectra, plus exact verification of the result.
//
// For phi_k with k >= 3 the construction works in K = Q(xi), xi a primitive
// k-th root of unity, with the power basis beta = (1, xi, ..., xi^{2g-1}):
//   1. conjugate basis beta~ with xi~ = 1/xi;
//   2. trace dual basis beta', from the trace form Tr(xi^{i+j}) = c_k(i+j);
//   3. M with M beta~ = Delta beta', Delta = xi^{1-g} phi_k'(xi), which is
//      integral, skew-symmetric and unimodular;
//   4. M = Q^T Omega Q over the integers (Darboux reduction);
//   5. A = matrix of multiplication by xi in the basis alpha = Q beta.
namespace dold::symplectic {

namespace nt = dold::numtheory;

/// Element of Q(xi) for xi a primitive k-th root of unity, as rational
/// coordinates in the power basis 1, xi, ..., xi^{phi(k)-1}.
class CyclotomicElement {
public:
    CyclotomicElement(Index k, std::vector<Rational> coords) : k_(k), coords_(std::move(coords)) {
        if (k == 0) throw DomainError("CyclotomicElement: k must be positive");
        if (coords_.size() != nt::totient(k)) throw DomainError("CyclotomicElement: wrong coordinate count");
    }

    /// Reduction of an arbitrary polynomial in xi modulo phi_k.
    static CyclotomicElement from_polynomial(Index k, const RationalPolynomial& p) {
        const auto reduced = p.mod_monic(nt::cyclotomic(k));
        std::vector<Rational> coords(nt::totient(k));
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = reduced.coeff(i);
        return {k, std::move(coords)};
    }

    static CyclotomicElement one(Index k) { return from_polynomial(k, RationalPolynomial{1}); }

    /// xi^m for m >= 0.
    static CyclotomicElement xi_power(Index k, Index m) {
        return from_polynomial(k, RationalPolynomial::monomial(1, m % k));
    }

    Index field() const { return k_; }
    const std::vector<Rational>& coords() const { return coords_; }
    RationalPolynomial polynomial() const { return RationalPolynomial(coords_); }

    friend bool operator==(const CyclotomicElement&, const CyclotomicElement&) = default;

private:
    Index k_;
    std::vector<Rational> coords_;
};

inline CyclotomicElement field_mul(const CyclotomicElement& x, const CyclotomicElement& y) {
    if (x.field() != y.field()) throw DomainError("field_mul: elements of different cyclotomic fields");
    return CyclotomicElement::from_polynomial(x.field(), x.polynomial() * y.polynomial());
}

enum class Layout {
    paired,  // basis (a1, b1, ..., ag, bg): g diagonal blocks [[0,1],[-1,0]]
    split,   // basis (a1, ..., ag, b1, ..., bg): [[0, I],[-I, 0]]
};

struct SymplecticForm {
    std::size_t size = 0;
    Layout layout = Layout::paired;

    static SymplecticForm paired(std::size_t size) { return {size, Layout::paired}; }

    IntMatrix matrix() const {
        if (size % 2 != 0) throw DomainError("SymplecticForm: odd size");
        IntMatrix m(size, size);
        const std::size_t g = size / 2;
        for (std::size_t i = 0; i < g; ++i) {
            const std::size_t a = layout == Layout::paired ? 2 * i : i;
            const std::size_t b = layout == Layout::paired ? 2 * i + 1 : g + i;
            m(a, b) = 1;
            m(b, a) = -1;
        }
        return m;
    }

    friend bool operator==(const SymplecticForm&, const SymplecticForm&) = default;
};

/// Rewrites a matrix given in the `from` basis order in the `to` order.
inline IntMatrix change_layout(const IntMatrix& a, Layout from, Layout to) {
    if (!a.is_square() || a.rows() % 2 != 0) throw DomainError("change_layout: need an even square matrix");
    if (from == to) return a;
    const std::size_t g = a.rows() / 2;
    // position of paired index j in the split order
    auto split_pos = [g](std::size_t j) { return j % 2 == 0 ? j / 2 : g + j / 2; };
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (from == Layout::paired)
                out(split_pos(i), split_pos(j)) = a(i, j);
            else
                out(i, j) = a(split_pos(i), split_pos(j));
        }
    return out;
}

inline bool is_symplectic(const IntMatrix& a, const SymplecticForm& form) {
    if (!a.is_square() || a.rows() != form.size) throw DomainError("is_symplectic: size mismatch");
    const IntMatrix omega = form.matrix();
    return a.transpose() * omega * a == omega;
}

inline IntMatrix direct_sum(const std::vector<IntMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) {
        if (!b.is_square()) throw DomainError("direct_sum: non-square block");
        n += b.rows();
    }
    IntMatrix out(n, n);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) out(at + i, at + j) = b(i, j);
        at += b.rows();
    }
    return out;
}

namespace detail {

inline void require_k(Index k, const char* who) {
    if (k < 3) throw DomainError(std::string(who) + ": k must be at least 3");
}

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

/// Gram matrix of the trace form in the power basis: entry (i, j) is
/// Tr(xi^{i+j}) = c_k(i+j), with Tr(1) = phi(k) on the diagonal corner.
inline IntMatrix trace_form_matrix(Index k) {
    detail::require_k(k, "trace_form_matrix");
    const std::size_t n = nt::totient(k);
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t(i, j) = i + j == 0 ? Integer(n) : nt::ramanujan_sum(k, i + j);
    return t;
}

/// Intermediate objects of the skew Gram construction; rows of the matrices
/// are coordinates in the power basis.
struct SkewGramConstruction {
    IntMatrix trace_form;
    RationalMatrix dual_basis;   // beta'
    CyclotomicElement delta;     // xi^{1-g} phi_k'(xi)
    RationalMatrix delta_dual;   // Delta beta'
    IntMatrix conjugate_basis;   // beta~
    IntMatrix gram;              // M, with M beta~ = Delta beta'
};

inline SkewGramConstruction skew_gram_construction(Index k) {
    detail::require_k(k, "skew_gram_matrix");
    const std::size_t n = nt::totient(k);
    const Index g = n / 2;

    IntMatrix trace = trace_form_matrix(k);
    // The dual basis vectors are the columns of the inverse trace form.
    RationalMatrix dual = inverse(to_rational(trace)).transpose();

    const IntPolynomial deriv = nt::cyclotomic(k).derivative();
    RationalPolynomial deriv_q;
    for (std::size_t i = 0; i < deriv.coefficients().size(); ++i)
        deriv_q += RationalPolynomial::monomial(Rational(deriv.coeff(i)), i);
    // xi^{1-g} = xi^{(1-g) mod k}
    const Index shift = ((1 + k) - (g % k)) % k;
    const CyclotomicElement delta =
        field_mul(CyclotomicElement::xi_power(k, shift), CyclotomicElement::from_polynomial(k, deriv_q));

    RationalMatrix delta_dual(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = dual(i, j);
        const auto prod = field_mul(delta, CyclotomicElement(k, row));
        for (std::size_t j = 0; j < n; ++j) delta_dual(i, j) = prod.coords()[j];
    }

    IntMatrix conj(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto e = CyclotomicElement::xi_power(k, (k - j % k) % k);
        for (std::size_t c = 0; c < n; ++c) conj(j, c) = boost::multiprecision::numerator(e.coords()[c]);
    }

    IntMatrix m = to_integer(delta_dual * inverse(to_rational(conj)), "skew_gram_matrix");
    if (!m.is_skew()) throw ConstructionError("skew_gram_matrix: result is not skew-symmetric");
    if (abs(determinant(m)) != 1) throw ConstructionError("skew_gram_matrix: result is not unimodular");
    return {std::move(trace), std::move(dual), delta, std::move(delta_dual), std::move(conj), std::move(m)};
}

inline IntMatrix skew_gram_matrix(Index k) { return skew_gram_construction(k).gram; }

/// Unimodular integer Q with M = Q^T Omega Q, Omega in paired layout.
///
/// Integer congruence reduction: take a nonzero entry of least absolute value
/// in the remaining block, move it to position (t, t+1) by symmetric swaps,
/// reduce rows t and t+1 against it by symmetric elementary operations, and
/// repeat while any remainder is left. With det M = +-1 the final pivot is
/// +-1; a -1 is fixed by swapping t and t+1. Ties in the pivot choice go to
/// the first entry of the upper triangle in row-major order.
inline IntMatrix darboux_factor(const IntMatrix& m) {
    if (!m.is_square() || m.rows() == 0 || m.rows() % 2 != 0)
        throw DomainError("darboux_factor: need a nonempty even square matrix");
    if (!m.is_skew()) throw DomainError("darboux_factor: matrix is not skew-symmetric");
    if (abs(determinant(m)) != 1) throw DomainError("darboux_factor: matrix is not unimodular");

    const std::size_t n = m.rows();
    // Invariant: m == Q^T W Q.
    IntMatrix w = m, q = IntMatrix::identity(n);
    auto swap_sym = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        w.swap_rows(a, b);
        w.swap_cols(a, b);
        q.swap_rows(a, b);
    };
    // column l -= f * column j, row l -= f * row j
    auto shear = [&](std::size_t l, std::size_t j, const Integer& f) {
        for (std::size_t i = 0; i < n; ++i) w(i, l) -= f * w(i, j);
        for (std::size_t i = 0; i < n; ++i) w(l, i) -= f * w(j, i);
        for (std::size_t c = 0; c < n; ++c) q(j, c) += f * q(l, c);
    };

    for (std::size_t t = 0; t < n; t += 2) {
        for (;;) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (w(i, j) != 0 && (pi == n || abs(w(i, j)) < abs(w(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) throw ConstructionError("darboux_factor: singular block");
            swap_sym(pi, t);
            swap_sym(pj, t + 1);
            const Integer d = w(t, t + 1);
            bool clean = true;
            for (std::size_t l = t + 2; l < n; ++l) {
                if (const Integer f = detail::floor_div(w(t, l), d); f != 0) shear(l, t + 1, f);
                if (const Integer f = detail::floor_div(w(t + 1, l), w(t + 1, t)); f != 0) shear(l, t, f);
                if (w(t, l) != 0 || w(t + 1, l) != 0) clean = false;
            }
            if (clean) break;
        }
        if (w(t, t + 1) == -1) swap_sym(t, t + 1);
        if (w(t, t + 1) != 1) throw ConstructionError("darboux_factor: pivot is not a unit");
    }
    if (q.transpose() * SymplecticForm::paired(n).matrix() * q != m)
        throw ConstructionError("darboux_factor: factorization check failed");
    return q;
}

namespace detail {

// Matrix of multiplication by xi in the power basis; row i holds xi * xi^i.
inline IntMatrix multiplication_by_xi(Index k) {
    const std::size_t n = nt::totient(k);
    IntMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = CyclotomicElement::xi_power(k, i + 1);
        for (std::size_t j = 0; j < n; ++j) c(i, j) = boost::multiprecision::numerator(e.coords()[j]);
    }
    return c;
}

inline IntMatrix build_cyclotomic_symplectic(Index k) {
    const IntMatrix q = darboux_factor(skew_gram_matrix(k));
    // alpha = Q beta and xi alpha = Q C beta, so A = Q C Q^{-1}.
    const IntMatrix a = to_integer(to_rational(q * multiplication_by_xi(k)) * inverse(to_rational(q)),
                                   "cyclotomic_symplectic");
    if (!is_symplectic(a, SymplecticForm::paired(a.rows())))
        throw ConstructionError("cyclotomic_symplectic: result is not symplectic");
    if (char_poly(a) != nt::cyclotomic(k))
        throw ConstructionError("cyclotomic_symplectic: wrong characteristic polynomial");
    return a;
}

}  // namespace detail

/// Integer symplectic matrix (paired layout) with characteristic polynomial
/// phi_k, k >= 3. Cached per process.
inline IntMatrix cyclotomic_symplectic(Index k) {
    detail::require_k(k, "cyclotomic_symplectic");
    static std::shared_mutex mutex;
    static std::map<Index, IntMatrix> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    IntMatrix a = detail::build_cyclotomic_symplectic(k);
    std::unique_lock lock(mutex);
    return cache.emplace(k, std::move(a)).first->second;
}

struct Realization {
    IntMatrix matrix;
    SymplecticForm form;
};

/// Block-diagonal symplectic matrix with spectrum r: r_1/2 copies of I_2,
/// r_2/2 copies of -I_2 and r_k copies of the phi_k block for k >= 3.
inline Realization realize_spectrum(const RootSpectrum& r) {
    const auto verdict = core::check_spectrum(r);
    if (!verdict) {
        std::string msg = "realize_spectrum: not realizable:";
        for (const auto& v : verdict.violations) msg += " " + v.describe();
        throw DomainError(msg);
    }
    if (r.empty()) throw DomainError("realize_spectrum: empty spectrum (genus 0)");
    std::vector<IntMatrix> blocks;
    for (const auto& [k, rk] : r) {
        IntMatrix block;
        Integer copies = rk;
        if (k == 1 || k == 2) {
            block = k == 1 ? IntMatrix::identity(2) : -IntMatrix::identity(2);
            copies /= 2;
        } else {
            block = cyclotomic_symplectic(k);
        }
        for (Integer c = 0; c < copies; ++c) blocks.push_back(block);
    }
    IntMatrix a = direct_sum(blocks);
    const std::size_t size = a.rows();
    return {std::move(a), SymplecticForm::paired(size)};
}

struct VerificationReport {
    bool symplectic = false;
    bool char_poly = false;
    bool lefschetz = false;
    Index horizon = 0;

    bool all() const { return symplectic && char_poly && lefschetz; }
};

inline constexpr Index default_horizon_cap = 10000;

/// Exact checks that A realizes r: A^T Omega A = Omega; char_poly(A) equals
/// prod_k phi_k^{r_k}; and 2 - tr(A^n) = L(f^n) for n up to lcm(support r).
inline VerificationReport verify_realization(const IntMatrix& a, const SymplecticForm& form, const RootSpectrum& r,
                                             Index horizon_cap = default_horizon_cap) {
    VerificationReport report;
    core::LefschetzView lefschetz(r);
    report.horizon = lefschetz.period();
    if (report.horizon > horizon_cap)
        throw HorizonError("verify_realization: horizon " + std::to_string(report.horizon) + " exceeds cap " +
                           std::to_string(horizon_cap));
    if (!a.is_square() || a.rows() == 0) return report;

    report.symplectic = a.rows() == form.size && is_symplectic(a, form);

    bool nonnegative = true;
    IntPolynomial expected{1};
    for (const auto& [k, rk] : r) {
        if (rk < 0) nonnegative = false;
        for (Integer c = 0; c < rk; ++c) expected *= nt::cyclotomic(k);
    }
    report.char_poly = nonnegative && char_poly(a) == expected;

    report.lefschetz = true;
    IntMatrix power = a;
    for (Index n = 1; n <= report.horizon; ++n) {
        if (Integer(2) - power.trace() != lefschetz(n)) {
            report.lefschetz = false;
            break;
        }
        if (n < report.horizon) power = power * a;
    }
    return report;
}

}  // namespace dold::symplectic
