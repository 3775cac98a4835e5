// Independent brute-force oracles used by the tests.  Everything here is
// deliberately naive; the implementations under test must match these on
// small inputs.

#ifndef THETA_TESTS_ORACLES_HPP
#define THETA_TESTS_ORACLES_HPP

#include <vector>

#include "theta/partition.hpp"

namespace theta::oracle {

/// All partitions of n (n >= 0), each as a weakly decreasing row vector.
std::vector<std::vector<int>> partitions_of(int n);

/// Dominance-maximal valid partition of the same total dominated by p,
/// found by exhaustive enumeration.  Asserts the maximum is unique.
Partition collapse_brute_force(const Partition& p, const LieType& t);

}  // namespace theta::oracle

#endif
