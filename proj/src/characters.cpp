#include "theta/characters.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace theta {

namespace {

std::vector<int> padded(const Partition& p, int len) {
    std::vector<int> v(p.rows());
    v.resize(len, 0);
    return v;
}

}  // namespace

std::string OLabel::to_string() const {
    std::string s = part.to_string();
    if (det) s += "*det";
    return s;
}

OLabel canonical_o_label(const Partition& p, int det, int b) {
    if (det != 0 && det != 1) throw std::invalid_argument("o label: det must be 0 or 1");
    const Partition pt = p.transpose();
    const int c1 = pt.row(0), c2 = pt.row(1);
    if (c1 + c2 > b)
        throw std::invalid_argument("o label: first two columns exceed " + std::to_string(b));
    if (2 * c1 <= b) {
        OLabel l{p, det};
        if (b % 2 == 0 && 2 * c1 == b) l.det = 0;  // the two sectors coincide
        return l;
    }
    // tall partition: fold to the associate label and flip the sector
    std::vector<int> cols(pt.rows());
    cols[0] = b - c1;
    std::sort(cols.begin(), cols.end(), std::greater<>());
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    OLabel l{Partition(cols).transpose(), 1 - det};
    if (b % 2 == 0 && 2 * l.part.transpose().row(0) == b) l.det = 0;
    return l;
}

Partition full_o_label(const OLabel& l, int b) {
    if (l.det == 0) return l.part;
    const Partition pt = l.part.transpose();
    std::vector<int> cols(pt.rows());
    for (int i = 0; i < pt.num_rows(); ++i) cols[i] = pt.row(i);
    if (cols.empty()) cols.push_back(0);
    cols[0] = b - cols[0];
    std::sort(cols.begin(), cols.end(), std::greater<>());
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    return Partition(cols).transpose();
}

WeightMap o_irrep_weights(const OLabel& l, int b) {
    const int k = b / 2;
    if (l.part.num_rows() > k)
        throw std::invalid_argument("o_irrep_weights: too many rows for O(" +
                                    std::to_string(b) + ")");
    auto hw = padded(l.part, k);
    if (b % 2 == 1) return bcd_weights('B', k, hw);
    WeightMap w = bcd_weights('D', k, hw);
    if (l.part.num_rows() == k) {
        auto hw2 = hw;
        hw2[k - 1] = -hw2[k - 1];
        add_scaled(w, bcd_weights('D', k, hw2), 1);
    }
    return w;
}

WeightMap o_irrep_twisted(const OLabel& l, int b) {
    const int k = b / 2;
    if (b % 2 == 1) {
        WeightMap w = o_irrep_weights(l, b);
        const long long sign = ((l.part.total() + l.det) % 2 == 0) ? 1 : -1;
        if (sign == 1) return w;
        WeightMap out;
        add_scaled(out, w, -1);
        return out;
    }
    if (l.part.num_rows() >= k) return {};  // induced from SO: vanishes off SO
    WeightMap w = bcd_weights('C', k - 1, padded(l.part, k - 1));
    if (l.det == 0) return w;
    WeightMap out;
    add_scaled(out, w, -1);
    return out;
}

long long o_irrep_dim(const OLabel& l, int b) {
    return total_multiplicity(o_irrep_weights(l, b));
}

long long u_irrep_dim(const std::vector<int>& hw) {
    return total_multiplicity(gl_weights(hw));
}

FormalCharacter::FormalCharacter(ProductGroup g) : group_(std::move(g)) {
    data_[0] = {};
}

std::vector<std::uint32_t> FormalCharacter::masks() const {
    std::vector<int> obits;
    for (size_t i = 0; i < group_.factors.size(); ++i)
        if (group_.factors[i].kind == FactorKind::O) obits.push_back(static_cast<int>(i));
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << obits.size()); ++s) {
        std::uint32_t mask = 0;
        for (size_t j = 0; j < obits.size(); ++j)
            if (s & (1u << j)) mask |= 1u << obits[j];
        out.push_back(mask);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> twisted_offsets(const ProductGroup& g, std::uint32_t mask) {
    std::vector<int> off;
    int r = 0;
    for (size_t i = 0; i < g.factors.size(); ++i) {
        off.push_back(r);
        int rank = g.factors[i].torus_rank();
        if ((mask & (1u << i)) && g.factors[i].is_even_o()) rank -= 1;
        r += rank;
    }
    off.push_back(r);
    return off;
}

int twisted_rank(const ProductGroup& g, std::uint32_t mask) {
    return twisted_offsets(g, mask).back();
}

const WeightMap& FormalCharacter::slice(std::uint32_t mask) const {
    static const WeightMap empty;
    auto it = data_.find(mask);
    return it == data_.end() ? empty : it->second;
}

WeightMap& FormalCharacter::slice_mut(std::uint32_t mask) { return data_[mask]; }

long long FormalCharacter::dim() const { return total_multiplicity(slice(0)); }

bool FormalCharacter::is_zero() const {
    for (const auto& [m, w] : data_)
        if (!w.empty()) return false;
    return true;
}

FormalCharacter& FormalCharacter::add_scaled_char(const FormalCharacter& other,
                                                  long long scale) {
    if (!(group_ == other.group_))
        throw std::invalid_argument("FormalCharacter: group mismatch");
    for (const auto& [mask, w] : other.data_) add_scaled(data_[mask], w, scale);
    return *this;
}

FormalCharacter FormalCharacter::tensor(const FormalCharacter& other) const {
    if (!(group_ == other.group_))
        throw std::invalid_argument("FormalCharacter::tensor: group mismatch");
    // trace multiplicativity holds slice by slice; weights add within each
    // factor block, so convolve blockwise
    FormalCharacter out(group_);
    for (const auto mask : masks()) {
        const auto& a = slice(mask);
        const auto& b = other.slice(mask);
        if (a.empty() || b.empty()) continue;
        WeightMap& tgt = out.slice_mut(mask);
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                Weight w(wa.size());
                for (size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
                tgt[w] += ca * cb;
            }
        // drop zeros
        for (auto it = tgt.begin(); it != tgt.end();)
            it = it->second == 0 ? tgt.erase(it) : std::next(it);
    }
    return out;
}

FormalCharacter FormalCharacter::irrep(const ProductGroup& g, const IrrepLabel& label) {
    const size_t nf = g.factors.size();
    if (label.u.size() != nf || label.o.size() != nf)
        throw std::invalid_argument("irrep: label slots must match the factors");
    FormalCharacter out(g);
    for (const auto mask : out.masks()) {
        WeightMap acc{{Weight{}, 1}};
        bool zero = false;
        for (size_t i = 0; i < nf && !zero; ++i) {
            WeightMap fw;
            const auto& f = g.factors[i];
            if (f.kind == FactorKind::U) {
                if (static_cast<int>(label.u[i].size()) != f.n)
                    throw std::invalid_argument("irrep: U label length mismatch");
                fw = gl_weights(label.u[i]);
            } else {
                fw = (mask & (1u << i)) ? o_irrep_twisted(label.o[i], f.n)
                                        : o_irrep_weights(label.o[i], f.n);
                if (fw.empty()) zero = true;
            }
            if (!zero) acc = tensor_concat(acc, fw);
        }
        if (!zero) out.slice_mut(mask) = std::move(acc);
    }
    return out;
}

namespace {

struct StripStep {
    IrrepLabel label;
    // sector-resolution bookkeeping
    std::vector<int> free_o;  // indices of O-factors whose det sector is free
};

/// Leading (blockwise) weight of the torus slice must be dominant per
/// factor; converts it to labels with undetermined O-sectors (det = 0).
StripStep leading_label(const ProductGroup& g, const Weight& w) {
    StripStep st;
    const auto off = g.offsets();
    st.label.u.resize(g.factors.size());
    st.label.o.resize(g.factors.size());
    for (size_t i = 0; i < g.factors.size(); ++i) {
        const auto& f = g.factors[i];
        const int r = f.torus_rank();
        std::vector<int> block(w.begin() + off[i], w.begin() + off[i] + r);
        for (int j = 0; j + 1 < r; ++j)
            if (block[j] < block[j + 1])
                throw std::runtime_error(
                    "decompose: leading weight is not dominant (not a character)");
        if (f.kind == FactorKind::U) {
            st.label.u[i] = block;
        } else {
            if (r > 0 && block[r - 1] < 0)
                throw std::runtime_error(
                    "decompose: negative leading O-weight (not a character)");
            while (!block.empty() && block.back() == 0) block.pop_back();
            st.label.o[i] = OLabel{Partition(block), 0};
            const bool distinguishable =
                f.n % 2 == 1 || static_cast<int>(block.size()) < f.n / 2;
            if (distinguishable) st.free_o.push_back(static_cast<int>(i));
        }
    }
    return st;
}

}  // namespace

std::vector<std::pair<IrrepLabel, long long>> FormalCharacter::decompose() const {
    FormalCharacter work = *this;
    std::vector<std::pair<IrrepLabel, long long>> out;
    const auto all_masks = masks();
    int guard = 0;
    while (!work.slice(0).empty()) {
        if (++guard > 2'000'000) throw std::runtime_error("decompose: runaway stripping");
        // blockwise-lex maximal torus weight
        const Weight lead = std::prev(work.slice(0).end())->first;
        StripStep st = leading_label(group_, lead);
        const long long c0 = work.slice(0).at(lead);

        // twisted leading coefficients for each sector-resolving mask
        const size_t nfree = st.free_o.size();
        std::vector<long long> csub(1u << nfree, 0);
        csub[0] = c0;
        for (std::uint32_t s = 1; s < (1u << nfree); ++s) {
            std::uint32_t mask = 0;
            for (size_t j = 0; j < nfree; ++j)
                if (s & (1u << j)) mask |= 1u << st.free_o[j];
            // leading twisted weight: per factor, the label truncated for
            // twisted even-O blocks, the label itself otherwise
            Weight tw;
            for (size_t i = 0; i < group_.factors.size(); ++i) {
                const auto& f = group_.factors[i];
                if (f.kind == FactorKind::U) {
                    tw.insert(tw.end(), st.label.u[i].begin(), st.label.u[i].end());
                } else {
                    int r = f.torus_rank();
                    if ((mask & (1u << i)) && f.is_even_o()) r -= 1;
                    auto block = padded(st.label.o[i].part, r);
                    tw.insert(tw.end(), block.begin(), block.end());
                }
            }
            auto it = work.slice(mask).find(tw);
            long long c = (it == work.slice(mask).end()) ? 0 : it->second;
            // remove the fixed sign of odd-O factors in the mask
            for (int i : st.free_o) {
                if (!(mask & (1u << i))) continue;
                const auto& f = group_.factors[i];
                if (f.n % 2 == 1 && st.label.o[i].part.total() % 2 == 1) c = -c;
            }
            csub[s] = c;
        }

        // Hadamard inversion: m_delta = 2^{-nfree} sum_S (-1)^{|S & delta|} c_S
        for (std::uint32_t delta = 0; delta < (1u << nfree); ++delta) {
            long long acc = 0;
            for (std::uint32_t s = 0; s < (1u << nfree); ++s)
                acc += (std::popcount(s & delta) % 2 == 0) ? csub[s] : -csub[s];
            if (acc % (1 << nfree) != 0)
                throw std::runtime_error("decompose: non-integral sector multiplicity");
            const long long m = acc / (1 << nfree);
            if (m < 0) throw std::runtime_error("decompose: negative multiplicity");
            if (m == 0) continue;
            IrrepLabel lab = st.label;
            for (size_t j = 0; j < nfree; ++j)
                lab.o[st.free_o[j]].det = (delta >> j) & 1;
            FormalCharacter ch = irrep(group_, lab);
            work.add_scaled_char(ch, -m);
            out.emplace_back(std::move(lab), m);
        }
    }
    // all twisted slices must be exhausted too
    for (const auto mask : all_masks)
        if (!work.slice(mask).empty())
            throw std::runtime_error("decompose: twisted trace residue (not a character)");
    std::sort(out.begin(), out.end());
    return out;
}

long long FormalCharacter::multiplicity(const IrrepLabel& label) const {
    for (const auto& [lab, m] : decompose())
        if (lab == label) return m;
    return 0;
}

std::vector<OLabel> branch_o_step(const OLabel& mu, int b) {
    if (b < 2) throw std::invalid_argument("branch_o_step: needs b >= 2");
    const Partition lam = full_o_label(mu, b);
    const int rows = lam.num_rows();
    // interlacing nu: lam_i >= nu_i >= lam_{i+1}; weak decrease is automatic
    std::vector<OLabel> out;
    std::vector<int> cur(rows, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == rows) {
            std::vector<int> v(cur.begin(), cur.end());
            while (!v.empty() && v.back() == 0) v.pop_back();
            Partition nu{std::move(v)};
            const Partition nut = nu.transpose();
            if (nut.row(0) + nut.row(1) <= b - 1)
                out.push_back(canonical_o_label(nu, 0, b - 1));
            return;
        }
        for (int v = lam.row(i); v >= lam.row(i + 1); --v) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<OLabel, long long> branch_O(const OLabel& mu, int t, int k) {
    if (k < 0 || k >= t) throw std::invalid_argument("branch_O: need 0 <= k < t");
    std::map<OLabel, long long> cur{{mu, 1}};
    for (int step = 0; step < k; ++step) {
        std::map<OLabel, long long> next;
        for (const auto& [lab, m] : cur)
            for (const auto& nu : branch_o_step(lab, t - step)) next[nu] += m;
        cur = std::move(next);
    }
    return cur;
}

FormalCharacter extract_u_factor(const FormalCharacter& ch, int factor_index,
                                 const std::vector<int>& target) {
    const auto& g = ch.group();
    if (factor_index < 0 || factor_index >= static_cast<int>(g.factors.size()) ||
        g.factors[factor_index].kind != FactorKind::U)
        throw std::invalid_argument("extract_u_factor: not a U factor");
    const int a = g.factors[factor_index].n;
    if (static_cast<int>(target.size()) != a)
        throw std::invalid_argument("extract_u_factor: label length mismatch");
    for (int i = 0; i + 1 < a; ++i)
        if (target[i] < target[i + 1])
            throw std::invalid_argument("extract_u_factor: label not dominant");

    ProductGroup rest;
    for (size_t i = 0; i < g.factors.size(); ++i)
        if (static_cast<int>(i) != factor_index) rest.factors.push_back(g.factors[i]);
    FormalCharacter out(rest);

    // signed permutations of rho = (a-1, ..., 0): Klimyk alternating sum
    std::vector<int> rho(a);
    std::iota(rho.rbegin(), rho.rend(), 0);
    std::vector<int> perm(a);
    std::iota(perm.begin(), perm.end(), 0);
    struct SignedPerm {
        std::vector<int> shift;  // target + rho - w(rho)
        int sign;
    };
    std::vector<SignedPerm> table;
    do {
        int sign = 1;
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        SignedPerm sp;
        sp.sign = sign;
        sp.shift.resize(a);
        for (int i = 0; i < a; ++i) sp.shift[i] = target[i] + rho[i] - rho[perm[i]];
        table.push_back(std::move(sp));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (const auto mask : ch.masks()) {
        const auto& src = ch.slice(mask);
        if (src.empty()) continue;
        const auto off = twisted_offsets(g, mask);
        const int blk = off[factor_index];
        const int blk_end = blk + a;  // U blocks never shrink under twisting
        // squeeze the factor's bit out of the mask for the remaining group
        const std::uint32_t rest_mask = (mask & ((1u << factor_index) - 1)) |
                                        ((mask >> (factor_index + 1)) << factor_index);
        auto& tgt = out.slice_mut(rest_mask);
        // group the fibers over the remaining coordinates
        std::map<Weight, std::map<std::vector<int>, long long>> fibers;
        for (const auto& [w, c] : src) {
            Weight restw;
            restw.insert(restw.end(), w.begin(), w.begin() + blk);
            restw.insert(restw.end(), w.begin() + blk_end, w.end());
            std::vector<int> ublock(w.begin() + blk, w.begin() + blk_end);
            fibers[restw][ublock] += c;
        }
        for (const auto& [restw, fib] : fibers) {
            long long m = 0;
            for (const auto& sp : table) {
                auto it = fib.find(sp.shift);
                if (it != fib.end()) m += sp.sign * it->second;
            }
            if (m != 0) tgt[restw] += m;
        }
        for (auto it = tgt.begin(); it != tgt.end();)
            it = it->second == 0 ? tgt.erase(it) : std::next(it);
    }
    return out;
}

}  // namespace theta
