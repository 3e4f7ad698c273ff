#include <cliquelab/random.hpp>

namespace cliquelab
{
    namespace
    {
        std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }

        std::uint64_t fnv1a(std::string_view text)
        {
            std::uint64_t hash = 0xcbf29ce484222325ULL;
            for (unsigned char c : text) {
                hash ^= c;
                hash *= 0x100000001b3ULL;
            }
            return hash;
        }
    } // namespace

    Seed derive(Seed seed, std::string_view tag, std::uint64_t index)
    {
        std::uint64_t h = splitmix64(seed.value);
        h = splitmix64(h ^ fnv1a(tag));
        h = splitmix64(h ^ index);
        return Seed{h};
    }

    Rng::Rng(Seed seed, std::string_view tag, std::uint64_t index) : engine_(derive(seed, tag, index).value) {}

    std::uint64_t Rng::below(std::uint64_t bound)
    {
        // Lemire's multiply-and-reject
        std::uint64_t x = engine_();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = engine_();
                m = static_cast<unsigned __int128>(x) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    double Rng::uniform()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool Rng::bernoulli(double p)
    {
        if (p >= 1.0)
            return true;
        if (p <= 0.0)
            return false;
        return uniform() < p;
    }
} // namespace cliquelab
