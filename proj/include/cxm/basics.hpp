#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cxm {

// Compact oriented surface S_{g,n}, punctures treated as marked points.
// Concrete geodesic kernels exist for xi in {2,3,4,5}.
struct Surface {
    int genus = 0;
    int punctures = 0;

    int complexity() const { return 3 * genus + punctures; }
    int euler() const { return 2 - 2 * genus - punctures; }

    bool operator==(const Surface&) const = default;
    auto operator<=>(const Surface&) const = default;

    std::string name() const {
        return "S_{" + std::to_string(genus) + "," + std::to_string(punctures) + "}";
    }
};

inline Surface surface_11() { return {1, 1}; }
inline Surface surface_04() { return {0, 4}; }
inline Surface surface_05() { return {0, 5}; }

class invalid_argument : public std::runtime_error {
  public:
    explicit invalid_argument(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic seeded RNG.  std::uniform_int_distribution is
// implementation-defined, so bounded draws are done by hand to keep
// artifacts bit-identical across compilers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw invalid_argument("Rng::below(0)");
        std::uint64_t x, r;
        do {
            x = next();
            r = x % n;
        } while (x - r > std::uint64_t(0) - n);
        return r;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + std::int64_t(below(std::uint64_t(hi - lo + 1)));
    }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

}  // namespace cxm
