// Counter-based deterministic random stream keyed by (seed, op-name, index).
// Independent streams never share state, so parallel callers with disjoint
// index ranges reproduce the serial results exactly.

#ifndef THETA_RNG_HPP
#define THETA_RNG_HPP

#include <complex>
#include <cstdint>
#include <string_view>

namespace theta {

class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::string_view op_name, std::uint64_t index);

    std::uint64_t next_u64();
    double uniform();                    // [0,1)
    double normal();                     // standard normal (Box-Muller)
    std::complex<double> complex_normal();  // (N(0,1) + i N(0,1)) / sqrt(2)

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace theta

#endif
