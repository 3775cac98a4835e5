#include "theta/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace theta {

int ProductGroup::torus_rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.torus_rank();
    return r;
}

std::vector<int> ProductGroup::offsets() const {
    std::vector<int> off;
    int r = 0;
    for (const auto& f : factors) {
        off.push_back(r);
        r += f.torus_rank();
    }
    return off;
}

std::string ProductGroup::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " x ";
        os << (factors[i].kind == FactorKind::U ? "U(" : "O(") << factors[i].n << ")";
    }
    return os.str();
}

long long total_multiplicity(const WeightMap& m) {
    long long s = 0;
    for (const auto& [w, c] : m) s += c;
    return s;
}

WeightMap tensor_concat(const WeightMap& a, const WeightMap& b) {
    WeightMap out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Weight w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
        }
    return out;
}

WeightMap convolve(const WeightMap& a, const WeightMap& b) {
    WeightMap out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Weight w(wa.size());
            for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
            out[w] += ca * cb;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

void add_scaled(WeightMap& into, const WeightMap& src, long long scale) {
    if (scale == 0) return;
    for (const auto& [w, c] : src) {
        auto it = into.find(w);
        if (it == into.end()) {
            if (c * scale != 0) into[w] = c * scale;
        } else {
            it->second += c * scale;
            if (it->second == 0) into.erase(it);
        }
    }
}

namespace {

// ---- root system data in epsilon coordinates -------------------------------

struct RootSystem {
    char letter;  // 'A' (gl), 'B', 'C', 'D'
    int rank;     // number of epsilon coordinates

    std::vector<Weight> positive_roots() const {
        std::vector<Weight> roots;
        auto mk = [&](int i, int j, int si, int sj) {
            Weight r(rank, 0);
            r[i] += si;
            if (j >= 0) r[j] += sj;
            return r;
        };
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) {
                roots.push_back(mk(i, j, 1, -1));
                if (letter == 'B' || letter == 'C' || letter == 'D')
                    roots.push_back(mk(i, j, 1, 1));
            }
        if (letter == 'B')
            for (int i = 0; i < rank; ++i) roots.push_back(mk(i, -1, 1, 0));
        if (letter == 'C')
            for (int i = 0; i < rank; ++i) roots.push_back(mk(i, -1, 2, 0));
        return roots;
    }

    /// rho doubled (to stay integral for 'B' and 'D').
    Weight rho2() const {
        Weight r(rank, 0);
        for (const auto& a : positive_roots())
            for (int i = 0; i < rank; ++i) r[i] += a[i];
        return r;
    }

    bool is_dominant(const Weight& w) const {
        for (int i = 0; i + 1 < rank; ++i)
            if (w[i] < w[i + 1]) return false;
        if (rank == 0) return true;
        if (letter == 'B' || letter == 'C') return w[rank - 1] >= 0;
        if (letter == 'D') return rank < 2 || w[rank - 2] >= std::abs(w[rank - 1]);
        return true;  // A
    }

    /// Dominant representative of the Weyl orbit.
    Weight dominant_rep(const Weight& w) const {
        Weight v = w;
        if (letter == 'A') {
            std::sort(v.begin(), v.end(), std::greater<>());
            return v;
        }
        int negs = 0;
        bool has_zero = false;
        for (auto& x : v) {
            if (x < 0) {
                ++negs;
                x = -x;
            }
            if (x == 0) has_zero = true;
        }
        std::sort(v.begin(), v.end(), std::greater<>());
        if (letter == 'D' && !has_zero && negs % 2 != 0) v[rank - 1] = -v[rank - 1];
        return v;
    }

    /// Full Weyl orbit of a dominant weight.
    std::vector<Weight> orbit(const Weight& w) const {
        std::set<Weight> seen;
        std::vector<Weight> stack{w};
        seen.insert(w);
        // generators: adjacent transpositions + a sign flip appropriate to type
        while (!stack.empty()) {
            Weight v = stack.back();
            stack.pop_back();
            auto push = [&](Weight u) {
                if (seen.insert(u).second) stack.push_back(u);
            };
            for (int i = 0; i + 1 < rank; ++i) {
                Weight u = v;
                std::swap(u[i], u[i + 1]);
                push(u);
            }
            if (letter == 'B' || letter == 'C') {
                Weight u = v;
                u[rank - 1] = -u[rank - 1];
                push(u);
            } else if (letter == 'D' && rank >= 2) {
                Weight u = v;
                u[rank - 1] = -u[rank - 1];
                u[rank - 2] = -u[rank - 2];
                push(u);
            }
        }
        return {seen.begin(), seen.end()};
    }
};

long dot(const Weight& a, const Weight& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

Weight add(const Weight& a, const Weight& b, int bscale = 1) {
    Weight r = a;
    for (size_t i = 0; i < a.size(); ++i) r[i] += bscale * b[i];
    return r;
}

/// Freudenthal recursion: multiplicities of the dominant weights of the
/// irrep with highest weight hw.  Root lattice membership is tested with
/// the coordinate parity appropriate to each type.
std::map<Weight, long long> freudenthal_dominant(const RootSystem& rs, const Weight& hw) {
    if (!rs.is_dominant(hw)) throw std::invalid_argument("freudenthal: hw not dominant");
    if (rs.rank == 0) return {{Weight{}, 1}};
    const auto pos = rs.positive_roots();
    const Weight rho2 = rs.rho2();

    auto norm_rho = [&](const Weight& w) {
        // (2w + rho2, 2w + rho2), working at doubled scale throughout
        Weight v = add(rho2, w, 2);
        return dot(v, v);
    };
    const long top = norm_rho(hw);

    auto in_root_lattice_diff = [&](const Weight& w) {
        // hw - w must lie in the root lattice
        long s = 0;
        for (int i = 0; i < rs.rank; ++i) s += hw[i] - w[i];
        if (rs.letter == 'A') return s == 0;  // coordinates sum to zero
        if (rs.letter == 'B') return true;    // epsilon_i is a root
        return s % 2 == 0;                    // C and D: even coordinate sum
    };

    // enumerate dominant candidates below hw
    std::vector<Weight> candidates;
    {
        const int hi = *std::max_element(hw.begin(), hw.end());
        const int lo = rs.letter == 'A' ? *std::min_element(hw.begin(), hw.end())
                                        : (rs.letter == 'D' ? -hi : 0);
        Weight cur(rs.rank, 0);
        auto rec = [&](auto&& self, int pos_i, int prev) -> void {
            if (pos_i == rs.rank) {
                if (rs.is_dominant(cur) && in_root_lattice_diff(cur) && norm_rho(cur) <= top)
                    candidates.push_back(cur);
                return;
            }
            // D allows one trailing negative entry; handled by is_dominant
            const int lo_here = (rs.letter == 'D' && pos_i == rs.rank - 1) ? lo : std::max(lo, 0);
            const int effective_lo = rs.letter == 'A' ? lo : lo_here;
            for (int v = std::min(prev, hi); v >= effective_lo; --v) {
                cur[pos_i] = v;
                self(self, pos_i + 1, v);
            }
        };
        rec(rec, 0, hi);
    }
    // sort by decreasing (., .)-with-rho: hw first
    std::sort(candidates.begin(), candidates.end(), [&](const Weight& a, const Weight& b) {
        return norm_rho(a) > norm_rho(b);
    });

    std::map<Weight, long long> mult;
    mult[hw] = 1;
    // every weight has entries within the hw sup-norm box, so rays leave the
    // weight diagram after at most 2*|hw|_inf + 1 steps
    int sup = 1;
    for (int x : hw) sup = std::max(sup, std::abs(x));
    const int jmax = 2 * sup + 1;
    for (const auto& mu : candidates) {
        if (mu == hw) continue;
        const long denom = top - norm_rho(mu);
        if (denom <= 0) continue;  // same norm as hw but not hw: multiplicity 0
        long long acc = 0;
        for (const auto& alpha : pos) {
            for (int j = 1; j <= jmax; ++j) {
                Weight nu = add(mu, alpha, j);
                const Weight rep = rs.dominant_rep(nu);
                auto it = mult.find(rep);
                if (it == mult.end()) continue;
                // the formula's 2 * (nu, alpha) at doubled scale: 8 * dot
                acc += it->second * 8 * dot(nu, alpha);
            }
        }
        if (acc % denom != 0)
            throw std::logic_error("freudenthal: non-integral multiplicity");
        const long long m = acc / denom;
        if (m < 0) throw std::logic_error("freudenthal: negative multiplicity");
        if (m > 0) mult[mu] = m;
    }
    return mult;
}

WeightMap expand_orbits(const RootSystem& rs, const std::map<Weight, long long>& dom) {
    WeightMap out;
    for (const auto& [w, m] : dom)
        for (const auto& v : rs.orbit(w)) out[v] += m;
    return out;
}

}  // namespace

WeightMap gl_weights(const std::vector<int>& hw) {
    for (size_t i = 1; i < hw.size(); ++i)
        if (hw[i] > hw[i - 1]) throw std::invalid_argument("gl_weights: hw not dominant");
    if (hw.empty()) return {{Weight{}, 1}};
    RootSystem rs{'A', static_cast<int>(hw.size())};
    return expand_orbits(rs, freudenthal_dominant(rs, hw));
}

WeightMap bcd_weights(char letter, int rank, const std::vector<int>& hw) {
    if (letter != 'B' && letter != 'C' && letter != 'D')
        throw std::invalid_argument("bcd_weights: bad letter");
    if (static_cast<int>(hw.size()) != rank)
        throw std::invalid_argument("bcd_weights: hw length must equal the rank");
    if (rank == 0) return {{Weight{}, 1}};
    RootSystem rs{letter, rank};
    return expand_orbits(rs, freudenthal_dominant(rs, hw));
}

}  // namespace theta
