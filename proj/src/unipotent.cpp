#include "theta/unipotent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "theta/dualpair.hpp"
#include "theta/orbitlift.hpp"

namespace theta {

InfChar::InfChar(std::vector<int> doubled_entries, int rank)
    : entries_(std::move(doubled_entries)), rank_(rank) {
    if (rank < 0) throw std::invalid_argument("InfChar: negative rank");
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

void InfChar::normalize() {
    while (static_cast<int>(entries_.size()) > rank_) {
        auto it = std::find(entries_.begin(), entries_.end(), 0);
        if (it == entries_.end())
            throw std::runtime_error("InfChar::normalize: surplus entries are nonzero in " +
                                     to_string());
        entries_.erase(it);
    }
    while (static_cast<int>(entries_.size()) < rank_) entries_.push_back(0);
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
}

bool InfChar::contains_zero() const {
    return std::find(entries_.begin(), entries_.end(), 0) != entries_.end();
}

bool InfChar::same_multiset(const InfChar& other) const {
    return entries_ == other.entries_;  // both kept sorted
}

std::string InfChar::to_string() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ',';
        if (entries_[i] % 2 == 0)
            os << entries_[i] / 2;
        else
            os << entries_[i] << "/2";
    }
    os << '}';
    return os.str();
}

std::vector<int> delta_vector(int N) {
    if (N < 0) throw std::invalid_argument("delta_vector: negative N");
    std::vector<int> out;
    for (int k = 0; k < N / 2; ++k) out.push_back(N - 2 - 2 * k);  // doubled N/2-1-k
    return out;
}

InfChar inf_char_theta_L(int p, int q, int t, int n) {
    std::vector<int> entries;
    for (int N : {t, p + q - 2 * n, 2 * n - t + 2}) {
        if (N < 0)
            throw std::invalid_argument("inf_char_theta_L: negative block size");
        auto d = delta_vector(N);
        entries.insert(entries.end(), d.begin(), d.end());
    }
    InfChar lambda(std::move(entries), (p + q) / 2);
    lambda.normalize();
    return lambda;
}

LieType bv_dual_type(const LieType& from) {
    switch (from.letter) {
        case 'D': return from;
        case 'B': return LieType::sp(from.m - 1);
        case 'C': return LieType::so(from.m + 1);
    }
    throw std::logic_error("bv_dual_type: bad letter");
}

Partition bv_dual(const Partition& p, const LieType& from) {
    if (p.total() != from.m)
        throw std::invalid_argument("bv_dual: total does not match the algebra");
    if (!is_valid_for_type(p, from))
        throw std::invalid_argument("bv_dual: " + p.to_string() +
                                    " is not a nilpotent orbit of the declared type");
    std::vector<int> rows(p.transpose().rows());
    if (from.letter == 'B') {
        // drop a box from the smallest part
        rows.back() -= 1;
        if (rows.back() == 0) rows.pop_back();
    } else if (from.letter == 'C') {
        // add a box to the largest part
        if (rows.empty())
            rows.push_back(1);
        else
            rows.front() += 1;
    }
    return collapse(Partition(std::move(rows)), bv_dual_type(from));
}

UnipotentCertificate check_special_unipotent(int p, int q, int t, int n, int dim_mu) {
    UnipotentCertificate cert;
    cert.g = LieType::so(p + q);
    cert.lambda = inf_char_theta_L(p, q, t, n);

    std::ostringstream note;
    bool ok = true;
    if (!(q + t >= 2 * n)) { note << "q+t < 2n; "; ok = false; }
    if (!(q >= n && n >= t)) { note << "q >= n >= t fails; "; ok = false; }
    if (dim_mu != 1) { note << "dim mu != 1; "; ok = false; }
    // standing range assumption: the enlarged pair is in stable range with
    // p+q+t even, which also matches the t-parity to the dual algebra type
    if (!in_stable_range(DualPairParams::osp(p, q, t, n))) {
        note << "(p,q+t) not in stable range with p+q+t even; ";
        ok = false;
    }
    cert.hypotheses_met = ok;
    cert.hypothesis_note = ok ? "" : "hypotheses not met: " + note.str();
    if (!ok) return cert;

    cert.orbit_C = lift_Od(p, q, t, n).value().shape();
    cert.dual_dC = bv_dual(cert.orbit_C, cert.g);

    // Closed form (p+q-2n-1, 2n-t+1, t-1, eps), eps = 0 for odd t and 1 for
    // even t, assembled into a partition.  At t = 0 the formal entries -1
    // and +1 cancel.
    {
        const int eps = (t % 2 == 0) ? 1 : 0;
        std::vector<int> vals{p + q - 2 * n - 1, 2 * n - t + 1, t - 1, eps};
        if (t == 0) {
            std::erase(vals, -1);
            auto it = std::find(vals.begin(), vals.end(), 1);
            if (it != vals.end()) vals.erase(it);
        }
        std::erase(vals, 0);
        std::sort(vals.begin(), vals.end(), std::greater<>());
        cert.expected_dC = Partition(std::move(vals));
    }
    cert.dual_matches_closed_form = (cert.dual_dC == cert.expected_dC);

    cert.special = (bv_dual(cert.dual_dC, bv_dual_type(cert.g)) == cert.orbit_C);

    std::vector<int> hv;
    for (int a : cert.dual_dC.rows()) {
        auto d = delta_vector(a + 1);
        hv.insert(hv.end(), d.begin(), d.end());
    }
    cert.half_Hvee = InfChar(std::move(hv), (p + q) / 2);
    cert.half_Hvee.normalize();

    cert.inf_char_matches = cert.half_Hvee.same_multiset(cert.lambda);
    // For p+q even the infinitesimal character is only defined up to the
    // outer involution; equality of multisets is unambiguous only when a
    // zero entry is present.
    cert.zero_entry_ambiguity = ((p + q) % 2 == 0) && !cert.lambda.contains_zero();

    cert.pass = cert.hypotheses_met && cert.dual_matches_closed_form && cert.special &&
                cert.inf_char_matches && !cert.zero_entry_ambiguity;
    return cert;
}

}  // namespace theta
