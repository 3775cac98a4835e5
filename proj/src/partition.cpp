#include "theta/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace theta {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0)
            throw std::invalid_argument("Partition: rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("Partition: rows must be weakly decreasing");
    }
}

int Partition::total() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0);
}

int Partition::row(int i) const {
    if (i < 0) throw std::out_of_range("Partition::row");
    return i < num_rows() ? rows_[i] : 0;
}

Partition Partition::transpose() const {
    if (rows_.empty()) return {};
    std::vector<int> cols(rows_[0], 0);
    for (int r : rows_)
        for (int c = 0; c < r; ++c) ++cols[c];
    return Partition(std::move(cols));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << ',';
        os << rows_[i];
    }
    os << ')';
    return os.str();
}

LieType::LieType(char l, int mm) : letter(l), m(mm) {
    if (l != 'B' && l != 'C' && l != 'D')
        throw std::invalid_argument("LieType: letter must be B, C or D");
    if (m < 0) throw std::invalid_argument("LieType: negative m");
    if (l == 'C' && m % 2 != 0)
        throw std::invalid_argument("LieType: sp(m) needs even m");
    if (l == 'B' && m % 2 == 0)
        throw std::invalid_argument("LieType: type B needs odd m");
    if (l == 'D' && m % 2 != 0)
        throw std::invalid_argument("LieType: type D needs even m");
}

long LieType::algebra_dim() const {
    long lm = m;
    return letter == 'C' ? lm * (lm + 1) / 2 : lm * (lm - 1) / 2;
}

SignedPartition::SignedPartition(std::vector<SignedRow> rows, Family family)
    : family_(family) {
    // merge equal (len, sign) runs, then canonical order
    std::map<std::pair<int, int>, long> acc;
    for (const auto& r : rows) {
        if (r.len <= 0)
            throw std::invalid_argument("SignedPartition: row length must be positive");
        if (r.mult <= 0)
            throw std::invalid_argument("SignedPartition: multiplicity must be positive");
        acc[{-r.len, r.lead == BoxSign::plus ? 0 : 1}] += r.mult;
    }
    for (const auto& [key, mult] : acc) {
        rows_.push_back(SignedRow{-key.first,
                                  key.second == 0 ? BoxSign::plus : BoxSign::minus,
                                  static_cast<int>(mult)});
    }
}

SignedValidation SignedPartition::validate() const {
    SignedValidation v;
    // multiplicity of each (len, sign)
    std::map<int, std::pair<int, int>> by_len;  // len -> (mult+, mult-)
    for (const auto& r : rows_) {
        auto& e = by_len[r.len];
        (r.lead == BoxSign::plus ? e.first : e.second) += r.mult;
    }
    const bool pair_even = (family_ == Family::orthogonal);
    for (const auto& [len, pm] : by_len) {
        const bool constrained = pair_even ? (len % 2 == 0) : (len % 2 == 1);
        if (constrained && pm.first != pm.second) {
            std::ostringstream os;
            os << "rows of length " << len << " must pair with opposite leading signs ("
               << pm.first << " with +, " << pm.second << " with -)";
            v.violations.push_back(os.str());
        }
    }
    v.ok = v.violations.empty();
    return v;
}

std::pair<int, int> SignedPartition::signature() const {
    int np = 0, nm = 0;
    for (const auto& r : rows_) {
        const int lead_boxes = (r.len + 1) / 2;
        const int other_boxes = r.len / 2;
        if (r.lead == BoxSign::plus) {
            np += lead_boxes * r.mult;
            nm += other_boxes * r.mult;
        } else {
            nm += lead_boxes * r.mult;
            np += other_boxes * r.mult;
        }
    }
    return {np, nm};
}

int SignedPartition::total_boxes() const {
    int n = 0;
    for (const auto& r : rows_) n += r.len * r.mult;
    return n;
}

Partition SignedPartition::shape() const {
    std::vector<int> rows;
    for (const auto& r : rows_)
        rows.insert(rows.end(), r.mult, r.len);
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return Partition(std::move(rows));
}

std::string SignedPartition::to_text() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& r : rows_) {
        if (!first) os << ' ';
        first = false;
        os << r.len << sign_char(r.lead);
        if (r.mult > 1) os << '^' << r.mult;
    }
    return os.str();
}

namespace {

std::string superscript(int n) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(n)) out += digits[c - '0'];
    return out;
}

}  // namespace

std::string SignedPartition::to_pretty() const {
    std::ostringstream os;
    for (const auto& r : rows_) {
        os << r.len << (r.lead == BoxSign::plus ? "₊" : "₋");
        if (r.mult > 1) os << superscript(r.mult);
    }
    return os.str();
}

SignedPartition SignedPartition::parse(const std::string& text, Family family) {
    std::vector<SignedRow> rows;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        size_t pos = 0;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos == 0 || pos >= tok.size())
            throw std::invalid_argument("SignedPartition::parse: bad token '" + tok + "'");
        SignedRow r;
        r.len = std::stoi(tok.substr(0, pos));
        if (tok[pos] == '+')
            r.lead = BoxSign::plus;
        else if (tok[pos] == '-')
            r.lead = BoxSign::minus;
        else
            throw std::invalid_argument("SignedPartition::parse: expected sign in '" + tok + "'");
        ++pos;
        r.mult = 1;
        if (pos < tok.size()) {
            if (tok[pos] != '^')
                throw std::invalid_argument("SignedPartition::parse: expected '^' in '" + tok + "'");
            r.mult = std::stoi(tok.substr(pos + 1));
        }
        rows.push_back(r);
    }
    return SignedPartition(std::move(rows), family);
}

bool dominance_leq(const Partition& a, const Partition& b) {
    const int n = std::max(a.num_rows(), b.num_rows());
    long pa = 0, pb = 0;
    for (int i = 0; i < n; ++i) {
        pa += a.row(i);
        pb += b.row(i);
        if (pa > pb) return false;
    }
    return true;
}

bool is_valid_for_type(const Partition& p, const LieType& t) {
    std::map<int, int> mult;
    for (int r : p.rows()) ++mult[r];
    const int bad_parity = t.is_orthogonal() ? 0 : 1;
    for (const auto& [part, m] : mult)
        if (part % 2 == bad_parity && m % 2 != 0) return false;
    return true;
}

Partition collapse(const Partition& p, const LieType& t) {
    if (p.total() != t.m)
        throw std::invalid_argument("collapse: partition total " + std::to_string(p.total()) +
                                    " does not match algebra rank carrier " + std::to_string(t.m));
    std::vector<int> rows = p.rows().begin() == p.rows().end()
                                ? std::vector<int>{}
                                : std::vector<int>(p.rows());
    const int bad_parity = t.is_orthogonal() ? 0 : 1;
    // Decrement-and-redistribute: take the largest constrained part with odd
    // multiplicity, remove a box from its last row, and drop the box into the
    // first later row that accepts it.  Repeats until the parity constraint
    // holds; the contract (dominance-maximal valid partition <= p) is
    // enforced by the brute-force oracle in the tests.
    for (;;) {
        std::map<int, int> mult;
        for (int r : rows) ++mult[r];
        int q = -1;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            if (it->first % 2 == bad_parity && it->second % 2 != 0) {
                q = it->first;
                break;
            }
        if (q < 0) break;
        int j = -1;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            if (rows[i] == q) j = i;
        rows[j] -= 1;
        bool placed = false;
        for (int i = j + 1; i < static_cast<int>(rows.size()); ++i) {
            const int above = rows[i - 1];
            if (rows[i] + 1 <= above) {
                rows[i] += 1;
                placed = true;
                break;
            }
        }
        if (!placed) rows.push_back(1);
        if (rows[j] == 0) rows.erase(rows.begin() + j);
        std::sort(rows.begin(), rows.end(), std::greater<>());
    }
    return Partition(std::move(rows));
}

long orbit_dim(const Partition& p, const LieType& t, OrbitLevel level) {
    if (p.total() != t.m)
        throw std::invalid_argument("orbit_dim: partition total does not match the algebra");
    if (!is_valid_for_type(p, t))
        throw std::invalid_argument("orbit_dim: partition " + p.to_string() +
                                    " is not a nilpotent orbit of the declared type");
    const Partition pt = p.transpose();
    long sq = 0;
    for (int c : pt.rows()) sq += static_cast<long>(c) * c;
    long odd = 0;
    for (int r : p.rows())
        if (r % 2 != 0) ++odd;
    // dim Z_g(e) = (sum of squared column lengths -/+ #odd parts)/2
    const long dimZ = t.is_orthogonal() ? (sq - odd) / 2 : (sq + odd) / 2;
    const long cx = t.algebra_dim() - dimZ;
    if (level == OrbitLevel::complex_orbit) return cx;
    if (cx % 2 != 0)
        throw std::logic_error("orbit_dim: complex orbit dimension is odd");
    return cx / 2;
}

long orbit_dim(const SignedPartition& sp, OrbitLevel level) {
    auto v = sp.validate();
    if (!v.ok)
        throw std::invalid_argument("orbit_dim: invalid signed partition: " + v.violations[0]);
    const LieType t = sp.family() == Family::orthogonal ? LieType::so(sp.total_boxes())
                                                        : LieType::sp(sp.total_boxes());
    return orbit_dim(sp.shape(), t, level);
}

}  // namespace theta
