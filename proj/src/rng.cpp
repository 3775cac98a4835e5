#include "theta/rng.hpp"

#include <cmath>

namespace theta {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::string_view op_name, std::uint64_t index) {
    key_ = splitmix64(seed ^ splitmix64(fnv1a(op_name) ^ splitmix64(index)));
}

std::uint64_t CounterRng::next_u64() {
    return splitmix64(key_ ^ splitmix64(++counter_));
}

double CounterRng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

std::complex<double> CounterRng::complex_normal() {
    return {normal() * M_SQRT1_2, normal() * M_SQRT1_2};
}

}  // namespace theta
