#include "theta/orbitlift.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace theta {

OrbitCycle::OrbitCycle(std::vector<Term> terms) {
    for (auto& t : terms) add(t.mult, t.orbit);
}

OrbitCycle& OrbitCycle::add(long mult, const SignedPartition& orbit) {
    if (mult < 0) throw std::invalid_argument("OrbitCycle: negative multiplicity");
    if (mult == 0) return *this;
    for (auto& t : terms_) {
        if (t.orbit == orbit) {
            t.mult += mult;
            return *this;
        }
    }
    terms_.push_back(Term{mult, orbit});
    return *this;
}

OrbitCycle OrbitCycle::operator+(const OrbitCycle& other) const {
    OrbitCycle out = *this;
    for (const auto& t : other.terms_) out.add(t.mult, t.orbit);
    return out;
}

const SignedPartition& LiftResult::value() const {
    if (!orbit) throw std::runtime_error("LiftResult: no orbit (" + diagnostic + ")");
    return *orbit;
}

SignedPartition lowest_weight_orbit(int n, int t) {
    if (n < 1 || t < 0)
        throw std::invalid_argument("lowest_weight_orbit: need n >= 1, t >= 0");
    const int d = std::min(t, n);
    std::vector<SignedRow> rows;
    if (d > 0) rows.push_back({2, BoxSign::minus, d});
    if (n - d > 0) {
        rows.push_back({1, BoxSign::plus, n - d});
        rows.push_back({1, BoxSign::minus, n - d});
    }
    return SignedPartition(std::move(rows), Family::symplectic);
}

SignedPartition lift_zero(int p, int q, int n) {
    if (n == 0) {
        std::vector<SignedRow> rows;
        if (p > 0) rows.push_back({1, BoxSign::plus, p});
        if (q > 0) rows.push_back({1, BoxSign::minus, q});
        return SignedPartition(std::move(rows), Family::orthogonal);
    }
    if (!in_stable_range(DualPairParams::osp(p, q, 0, n)))
        throw std::invalid_argument("lift_zero: (p,q,n) not in stable range");
    auto res = lift_Od(p, q, 0, n);
    return res.value();
}

LiftResult lift_Od(int p, int q, int t, int n) {
    if (n < 1 || t < 0 || p < 0 || q < 0)
        throw std::invalid_argument("lift_Od: bad parameters");
    if (2 * n > std::min(p, q + t))
        throw std::invalid_argument("lift_Od: requires 2n <= min(p, q+t)");
    const int d = std::min(t, n);
    LiftResult res;
    res.provenance = t == 0 ? "eq7" : "eq6";
    const int e_plus = p - 2 * n;
    const int e_minus = q + d - 2 * n;
    if (e_minus < 0) {
        std::ostringstream os;
        os << "exponent q+d-2n = " << e_minus << " is negative; the closed form does not "
           << "apply (use the numerical orbit identifier)";
        res.diagnostic = os.str();
        return res;
    }
    std::vector<SignedRow> rows;
    if (d > 0) rows.push_back({3, BoxSign::plus, d});
    if (n - d > 0) {
        rows.push_back({2, BoxSign::plus, n - d});
        rows.push_back({2, BoxSign::minus, n - d});
    }
    if (e_plus > 0) rows.push_back({1, BoxSign::plus, e_plus});
    if (e_minus > 0) rows.push_back({1, BoxSign::minus, e_minus});
    res.orbit = SignedPartition(std::move(rows), Family::orthogonal);
    return res;
}

SignedPartition add_column_lift(const SignedPartition& sp, int p, int q) {
    if (sp.family() != Family::symplectic)
        throw std::invalid_argument("add_column_lift: input must be a symplectic diagram");
    auto v = sp.validate();
    if (!v.ok)
        throw std::invalid_argument("add_column_lift: invalid input: " + v.violations[0]);
    // Prepend one box per row; alternation forces the new leading sign to be
    // the opposite of the old one.
    std::vector<SignedRow> rows;
    for (const auto& r : sp.rows())
        rows.push_back({r.len + 1, flip(r.lead), r.mult});
    SignedPartition grown(rows, Family::orthogonal);
    auto [np, nm] = grown.signature();
    const int pad_plus = p - np, pad_minus = q - nm;
    if (pad_plus < 0 || pad_minus < 0) {
        std::ostringstream os;
        os << "no sign assignment achieves signature (" << p << "," << q
           << "): column-grown diagram already has (" << np << "," << nm << ")";
        throw std::invalid_argument("add_column_lift: " + os.str());
    }
    if (pad_plus > 0) rows.push_back({1, BoxSign::plus, pad_plus});
    if (pad_minus > 0) rows.push_back({1, BoxSign::minus, pad_minus});
    SignedPartition out(std::move(rows), Family::orthogonal);
    auto vo = out.validate();
    if (!vo.ok)
        throw std::invalid_argument("add_column_lift: output violates pairing: " +
                                    vo.violations[0]);
    return out;
}

OrbitCycle lift_cycle(const OrbitCycle& c, const DualPairParams& target) {
    if (target.family != PairFamily::OSp)
        throw std::invalid_argument("lift_cycle: only the osp family lifts orbits here");
    OrbitCycle out;
    for (const auto& term : c.terms())
        out.add(term.mult, add_column_lift(term.orbit, target.p, target.q));
    return out;
}

OrbitCycle assoc_cycle_theta_sigma(int p, int q, int n) {
    if ((p + q) % 2 != 0)
        throw std::invalid_argument("assoc_cycle_theta_sigma: p+q must be even");
    if (!in_stable_range(DualPairParams::osp(p, q, 0, n)))
        throw std::invalid_argument("assoc_cycle_theta_sigma: not in stable range");
    OrbitCycle out;
    out.add(1, lift_zero(p, q, n));
    return out;
}

}  // namespace theta
