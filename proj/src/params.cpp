#include <cliquelab/errors.hpp>
#include <cliquelab/params.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>

namespace cliquelab
{
    namespace mp = boost::multiprecision;

    BigRational parse_big_rational(const std::string &text)
    {
        auto bad = [&] { return DomainError("cannot parse '" + text + "' as a rational number"); };
        if (text.empty())
            throw bad();
        if (auto slash = text.find('/'); slash != std::string::npos) {
            const BigRational num = parse_big_rational(text.substr(0, slash));
            const BigRational den = parse_big_rational(text.substr(slash + 1));
            if (den == 0)
                throw bad();
            return num / den;
        }
        std::size_t pos = 0;
        bool negative = false;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            ++pos;
        }
        BigInt numerator = 0;
        BigInt denominator = 1;
        bool seen_digit = false;
        bool fraction = false;
        for (; pos < text.size(); ++pos) {
            const char c = text[pos];
            if (c == '.' && !fraction) {
                fraction = true;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw bad();
            seen_digit = true;
            numerator = numerator * 10 + (c - '0');
            if (fraction)
                denominator *= 10;
        }
        if (!seen_digit)
            throw bad();
        BigRational value(numerator, denominator);
        return negative ? BigRational(-value) : value;
    }

    bool RgpParams::all_conditions_hold() const
    {
        return std::all_of(conditions.begin(), conditions.end(), [](const SideCondition &c) { return c.holds; });
    }

    const SideCondition &RgpParams::condition(const std::string &name) const
    {
        for (const auto &c : conditions)
            if (c.name == name)
                return c;
        throw DomainError("no side condition named " + name);
    }

    std::optional<std::uint64_t> exact_log2(std::uint64_t n)
    {
        if (n == 0 || (n & (n - 1)) != 0)
            return std::nullopt;
        std::uint64_t log = 0;
        while ((n >>= 1) != 0)
            ++log;
        return log;
    }

    BigInt binomial(std::uint64_t n, std::uint64_t k)
    {
        if (k > n)
            return 0;
        k = std::min(k, n - k);
        BigInt result = 1;
        for (std::uint64_t i = 1; i <= k; ++i)
            result = result * (n - k + i) / i;
        return result;
    }

    BigInt ceil_root(const BigInt &x, unsigned q)
    {
        if (q == 0)
            throw DomainError("ceil_root needs q >= 1");
        if (x <= 1)
            return x < 0 ? BigInt(0) : x;
        if (q == 1)
            return x;
        // integer Newton from above: converges to floor(x^(1/q)) without any
        // floating estimate, which loses precision once x has many bits
        const auto bits = static_cast<unsigned>(mp::msb(x)) + 1;
        BigInt r = BigInt(1) << ((bits + q - 1) / q);
        for (;;) {
            const BigInt next = ((q - 1) * r + x / mp::pow(r, q - 1)) / q;
            if (next >= r)
                break;
            r = next;
        }
        return mp::pow(r, q) == x ? r : BigInt(r + 1);
    }

    namespace
    {
        BigFloat to_float(const BigRational &value)
        {
            return BigFloat(mp::numerator(value)) / BigFloat(mp::denominator(value));
        }

        BigFloat log2_of(const BigRational &value)
        {
            return (mp::log(BigFloat(mp::numerator(value))) - mp::log(BigFloat(mp::denominator(value)))) /
                   mp::log(BigFloat(2));
        }

        BigFloat log2_of(std::uint64_t value)
        {
            return mp::log(BigFloat(value)) / mp::log(BigFloat(2));
        }

        unsigned to_exponent(const BigInt &value)
        {
            return static_cast<unsigned>(value);
        }

        // base^(p/q) <=> bound, deciding  base^p  vs  bound^q  exactly when small enough.
        // Returns sign of (lhs - rhs) where lhs = a * n^(p/q), rhs = b.
        struct Comparison
        {
            int sign;
            bool exact;
        };

        Comparison compare_scaled_power(const BigInt &a, std::uint64_t n, const BigRational &exponent, const BigInt &b)
        {
            const BigInt p = mp::numerator(exponent);
            const BigInt q = mp::denominator(exponent);
            const BigFloat log_lhs = log2_of(BigRational(a)) + to_float(exponent) * log2_of(n);
            const BigFloat log_rhs = log2_of(BigRational(b));
            const BigFloat bits_needed = (log_lhs > log_rhs ? log_lhs : log_rhs) * BigFloat(q);
            if (bits_needed < RgpParams::kMaxExactBits && p >= 0) {
                const BigInt lhs = mp::pow(a, to_exponent(q)) * mp::pow(BigInt(n), to_exponent(p));
                const BigInt rhs = mp::pow(b, to_exponent(q));
                return {lhs < rhs ? -1 : (lhs > rhs ? 1 : 0), true};
            }
            return {log_lhs < log_rhs ? -1 : (log_lhs > log_rhs ? 1 : 0), false};
        }
    } // namespace

    RgpParams paper_params(std::uint64_t n, const BigRational &delta, std::uint64_t k, const ApproxTarget &target)
    {
        std::vector<std::string> failed;
        // delta = 1/2 itself is accepted: it is the value the headline instantiation uses
        if (!(delta > 0 && delta <= BigRational(1, 2)))
            failed.emplace_back("0 < delta <= 1/2");
        if (k < 20)
            failed.emplace_back("k >= 20");
        if (n < 2)
            failed.emplace_back("n >= 2");
        if (target.value <= 0)
            failed.emplace_back("approximation target > 0");
        if (!failed.empty()) {
            std::string message = "paper_params preconditions violated:";
            for (const auto &f : failed)
                message += " [" + f + "]";
            throw DomainError(message);
        }

        RgpParams params;
        params.n = n;
        params.delta = delta;
        params.k = k;
        params.target = target;

        const BigRational delta_sq = delta * delta;
        const auto log2n_exact = exact_log2(n);
        const BigFloat log2n = log2n_exact ? BigFloat(*log2n_exact) : log2_of(n);

        // ell
        const BigRational scale = BigRational(100'000'000) * target.value / (delta_sq * BigRational(k));
        if (log2n_exact) {
            const BigRational exact = scale * BigRational(*log2n_exact);
            BigInt floor_value = mp::numerator(exact) / mp::denominator(exact);
            params.ell = floor_value * mp::denominator(exact) == mp::numerator(exact) ? floor_value : floor_value + 1;
        } else {
            // log2 n is irrational here, so the product is never an integer
            params.ell = static_cast<BigInt>(mp::ceil(to_float(scale) * log2n));
        }

        // d = 10^7 log2 n / (ell delta^2)
        const BigRational d_scale = BigRational(10'000'000) / (BigRational(params.ell) * delta_sq);
        if (log2n_exact)
            params.d_exact = d_scale * BigRational(*log2n_exact);
        params.d = params.d_exact ? to_float(*params.d_exact) : to_float(d_scale) * log2n;

        // N = ceil(100 k n^((1-delta) ell))
        params.exponent = (BigRational(1) - delta) * BigRational(params.ell);
        const BigInt hundred_k = BigInt(100) * k;
        params.log2_N = log2_of(BigRational(hundred_k)) + to_float(params.exponent) * log2n;
        const BigInt p = mp::numerator(params.exponent);
        const BigInt q = mp::denominator(params.exponent);
        if (params.log2_N * BigFloat(q) < RgpParams::kMaxExactBits) {
            const BigInt radicand = mp::pow(hundred_k, to_exponent(q)) * mp::pow(BigInt(n), to_exponent(p));
            params.N_exact = ceil_root(radicand, to_exponent(q));
            params.log2_N = log2_of(BigRational(*params.N_exact));
        }

        auto add = [&](std::string name, bool holds, bool exact) {
            params.conditions.push_back({std::move(name), holds, exact ? "exact" : "log2"});
        };

        add("ell >= k", params.ell >= k, true);

        // k * ell <= n^(0.99 delta)
        {
            const auto cmp = compare_scaled_power(BigInt(1), n, BigRational(99, 100) * delta, BigInt(k) * params.ell);
            add("k*ell <= n^(0.99*delta)", cmp.sign >= 0, cmp.exact);
        }

        // 10 k n^e <= N <= 1000 k n^e
        if (params.N_exact) {
            const auto lower = compare_scaled_power(BigInt(10) * k, n, params.exponent, *params.N_exact);
            const auto upper = compare_scaled_power(BigInt(1000) * k, n, params.exponent, *params.N_exact);
            add("N >= 10*k*n^((1-delta)*ell)", lower.sign <= 0, lower.exact);
            add("N <= 1000*k*n^((1-delta)*ell)", upper.sign >= 0, upper.exact);
        } else {
            const BigFloat log_core = to_float(params.exponent) * log2n;
            add("N >= 10*k*n^((1-delta)*ell)", params.log2_N >= log2_of(BigRational(BigInt(10) * k)) + log_core,
                false);
            add("N <= 1000*k*n^((1-delta)*ell)", params.log2_N <= log2_of(BigRational(BigInt(1000) * k)) + log_core,
                false);
        }

        // d <= k / (10 * target)
        const BigRational density_target = BigRational(k) / (BigRational(10) * target.value);
        if (params.d_exact)
            add("d <= k/(10*target)", *params.d_exact <= density_target, true);
        else
            add("d <= k/(10*target)", params.d <= to_float(density_target), false);

        return params;
    }

    std::uint64_t hypergraph_ell(std::uint64_t rho, double g_value)
    {
        if (!(g_value > 0.0))
            throw DomainError("g(rho) must be positive");
        const double value = static_cast<double>(rho) / std::pow(g_value, 0.1);
        auto ell = static_cast<std::uint64_t>(std::ceil(value));
        return std::max<std::uint64_t>(ell, 1);
    }
} // namespace cliquelab
