#pragma once

#include <cliquelab/graph.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cliquelab
{
    using BigInt = boost::multiprecision::cpp_int;
    using BigRational = boost::multiprecision::cpp_rational;
    using BigFloat = boost::multiprecision::cpp_bin_float_100;

    // Exact rational from a decimal ("0.25"), fraction ("3/7") or integer literal.
    BigRational parse_big_rational(const std::string &text);

    // Approximation target: a constant factor C, or the value g(k) of a ratio function.
    struct ApproxTarget
    {
        enum class Kind
        {
            constant,
            ratio
        };
        Kind kind = Kind::constant;
        BigRational value{1};
    };

    struct SideCondition
    {
        std::string name;
        bool holds = false;
        // "exact" (integer arithmetic) or "log2" (100-digit floating point)
        std::string method;
    };

    // Parameters of the DkS hardness instantiation of the randomized graph product.
    // log is base 2 throughout.
    struct RgpParams
    {
        std::uint64_t n = 0;
        BigRational delta;
        std::uint64_t k = 0;
        ApproxTarget target;

        // ceil(10^8 * target * log2 n / (delta^2 * k))
        BigInt ell;
        // (1 - delta) * ell
        BigRational exponent;
        // ceil(100 * k * n^exponent), kept only when it has at most kMaxExactBits bits
        std::optional<BigInt> N_exact;
        BigFloat log2_N;
        // 10^7 * log2 n / (ell * delta^2); exact when n is a power of two
        BigFloat d;
        std::optional<BigRational> d_exact;

        std::vector<SideCondition> conditions;

        static constexpr std::uint64_t kMaxExactBits = 1u << 20;

        bool all_conditions_hold() const;
        const SideCondition &condition(const std::string &name) const;
    };

    // Throws DomainError naming every failed precondition
    // (0 < delta <= 1/2, k >= 20, n >= 2, target > 0).
    RgpParams paper_params(std::uint64_t n, const BigRational &delta, std::uint64_t k, const ApproxTarget &target);

    // C(n, k) exactly; 0 when k > n.
    BigInt binomial(std::uint64_t n, std::uint64_t k);

    // Least integer m with m^q >= x (q >= 1).
    BigInt ceil_root(const BigInt &x, unsigned q);

    // log2 n exactly, when n is a power of two.
    std::optional<std::uint64_t> exact_log2(std::uint64_t n);

    // ceil(rho / g^0.1): the clique-hypergraph parameter ell for a ratio value g(rho).
    std::uint64_t hypergraph_ell(std::uint64_t rho, double g_value);
} // namespace cliquelab
