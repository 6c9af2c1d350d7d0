#pragma once

#include "antiramsey/forest.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace antiramsey::formulas {

/// Value of a closed-form anti-Ramsey or Turán expression together with the
/// parity-dependent correction it used and the range in which it is known to hold.
struct FormulaResult {
    std::int64_t value = 0;
    /// ε for AR formulas, c for the linear-forest Turán formula; unset when
    /// the formula has no parity term.
    std::optional<int> epsilon;
    std::string validity;
};

/// Exact rational in lowest terms with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parity census of the parts of a forest. Every parity-dependent constant is
/// read from here.
struct ParityCensus {
    int components = 0;
    int evenParts = 0;

    explicit ParityCensus(const LinearForest& f);

    bool allOdd() const noexcept { return evenParts == 0; }
    /// ε of the main linear-forest formula: 1 iff exactly one part is even.
    int mainEpsilon() const noexcept { return evenParts == 1 ? 1 : 0; }
    /// ϵ of the asymptotic coefficient: 1 if all parts are odd, 2 otherwise.
    int asymptoticEpsilon() const noexcept { return allOdd() ? 1 : 2; }
    /// c of the Turán formula: 1 if all parts are odd, 0 otherwise.
    int turanConstant() const noexcept { return allOdd() ? 1 : 0; }
};

/// binom(x, 2) with the combinatorial convention binom(x,2) = 0 for x < 2.
std::int64_t choose2(std::int64_t x);

/// AR(n, P_k) for large n. Throws OutOfValidity when n < k and for k = 2,
/// where no coloring avoids a rainbow single edge.
FormulaResult arPath(std::int64_t n, int k);

/// AR(n, tK_2), valid for t >= 2 and n >= 2t+1.
FormulaResult arMatching(std::int64_t n, int t);

/// AR(n, F) for a linear forest with at least one even part and k >= 2, for n
/// beyond an unquantified threshold. All-odd forests raise UnsupportedCase.
FormulaResult arLinearForestMain(std::int64_t n, const LinearForest& f);

/// Coefficient of n in AR(n, F) = (sum floor(t_i/2) - ϵ) n + O(1).
std::int64_t arAsymptoticCoefficient(const LinearForest& f);

/// (k-2) n / 2, an upper bound on ex(n, P_k) for all n, k >= 1.
Rational erdosGallaiBound(std::int64_t n, int k);

/// ex(n, k·P_3) for n >= 7k.
FormulaResult exKP3(std::int64_t n, int k);

/// ex(n, F) for k >= 2 with some part other than 3, for large n.
FormulaResult exLinearForest(std::int64_t n, const LinearForest& f);

}  // namespace antiramsey::formulas
