#include "antiramsey/formulas.hpp"

#include "antiramsey/errors.hpp"

#include <numeric>

namespace antiramsey::formulas {

namespace {

std::int64_t checkedAdd(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw OutOfValidity("formula value overflows 64-bit integers");
    return r;
}

std::int64_t checkedMul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw OutOfValidity("formula value overflows 64-bit integers");
    return r;
}

// binom(h,2) + h(n-h): a hub of h vertices joined to everything. Every formula
// here is this count plus a constant tail.
std::int64_t hubCount(std::int64_t h, std::int64_t n)
{
    return checkedAdd(choose2(h), checkedMul(h, n - h));
}

void requireMultiComponent(const LinearForest& f, const char* what)
{
    if (f.componentCount() < 2)
        throw InvalidArgument(std::string(what) + " needs a forest with at least two paths; use arPath for a single path");
}

}  // namespace

ParityCensus::ParityCensus(const LinearForest& f) : components(f.componentCount()), evenParts(f.evenCount()) {}

std::int64_t choose2(std::int64_t x)
{
    if (x < 2)
        return 0;
    return x % 2 == 0 ? checkedMul(x / 2, x - 1) : checkedMul(x, (x - 1) / 2);
}

FormulaResult arPath(std::int64_t n, int k)
{
    if (k < 2)
        throw InvalidArgument("path order must be at least 2");
    if (k == 2)
        throw OutOfValidity("AR(n, P2) is degenerate: every edge is a rainbow P2");
    if (n < k)
        throw OutOfValidity("n = " + std::to_string(n) + " cannot host P" + std::to_string(k));
    const std::int64_t hub = (k - 1) / 2 - 1;
    const int eps = k % 2 == 0 ? 1 : 0;
    return {checkedAdd(hubCount(hub, n), 1 + eps), eps, "n sufficiently large"};
}

FormulaResult arMatching(std::int64_t n, int t)
{
    if (t < 2)
        throw InvalidArgument("matching size must be at least 2");
    if (n < 2 * static_cast<std::int64_t>(t) + 1)
        throw OutOfValidity("matching formula holds for n >= 2t+1 = " + std::to_string(2 * t + 1));
    return {checkedAdd(hubCount(t - 2, n), 1), std::nullopt, "n >= 2t+1"};
}

FormulaResult arLinearForestMain(std::int64_t n, const LinearForest& f)
{
    requireMultiComponent(f, "arLinearForestMain");
    const ParityCensus census(f);
    if (census.allOdd())
        throw UnsupportedCase("forest " + f.name()
                              + " has only odd paths; only the asymptotic coefficient (epsilon = 1) is provided");
    if (n < f.order())
        throw OutOfValidity("n = " + std::to_string(n) + " is smaller than |V(F)| = " + std::to_string(f.order()));
    const int eps = census.mainEpsilon();
    return {checkedAdd(hubCount(f.halfSum() - 2, n), 1 + eps), eps,
            "n >= f(t1,...,tk), threshold unquantified"};
}

std::int64_t arAsymptoticCoefficient(const LinearForest& f)
{
    requireMultiComponent(f, "arAsymptoticCoefficient");
    return f.halfSum() - ParityCensus(f).asymptoticEpsilon();
}

Rational erdosGallaiBound(std::int64_t n, int k)
{
    if (n < 1 || k < 1)
        throw InvalidArgument("Erdos-Gallai bound needs n, k >= 1");
    std::int64_t num = checkedMul(k - 2, n);
    std::int64_t den = 2;
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

FormulaResult exKP3(std::int64_t n, int k)
{
    if (k < 1)
        throw InvalidArgument("number of P3 copies must be at least 1");
    if (n < 7 * static_cast<std::int64_t>(k))
        throw OutOfValidity("k·P3 formula holds for n >= 7k = " + std::to_string(7 * k));
    const std::int64_t hub = k - 1;
    return {checkedAdd(hubCount(hub, n), (n - hub) / 2), std::nullopt, "n >= 7k"};
}

FormulaResult exLinearForest(std::int64_t n, const LinearForest& f)
{
    if (f.componentCount() < 2)
        throw InvalidArgument("exLinearForest needs a forest with at least two paths");
    if (f.allEqualTo(3))
        throw UnsupportedCase("every path is P3; use exKP3");
    if (n < f.order())
        throw OutOfValidity("n = " + std::to_string(n) + " is smaller than |V(F)| = " + std::to_string(f.order()));
    const int c = ParityCensus(f).turanConstant();
    return {checkedAdd(hubCount(f.halfSum() - 1, n), c), c, "n sufficiently large"};
}

}  // namespace antiramsey::formulas
