#include "genschur/partition.hpp"

#include <algorithm>
#include <numeric>

#include "genschur/errors.hpp"

namespace genschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw shape_error("partition parts must be positive: " + str());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw shape_error("partition parts must be weakly decreasing: " + str());
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

std::vector<int> Partition::particle_coords(int n, int len) const {
    if (length() > n)
        throw length_error("particle_coords: partition length " + std::to_string(length()) +
                           " exceeds n = " + std::to_string(n));
    if (len < length())
        throw length_error("particle_coords: len shorter than partition length");
    std::vector<int> l(len);
    for (int a = 0; a < len; ++a) l[a] = part(a) - a + n - 1;
    return l;
}

int Partition::frobenius_rank() const {
    int r = 0;
    while (r < length() && parts_[r] > r) ++r;
    return r;
}

std::string Partition::str() const {
    if (parts_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Frobenius frobenius(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    int r = lambda.frobenius_rank();
    Frobenius f;
    f.arms.reserve(r);
    f.legs.reserve(r);
    for (int i = 0; i < r; ++i) {
        f.arms.push_back(lambda.part(i) - i - 1);
        f.legs.push_back(conj.part(i) - i - 1);
    }
    return f;
}

namespace {

void check_strict_nonneg(const std::vector<int>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) throw shape_error(std::string(what) + " must be nonnegative");
        if (i > 0 && v[i] >= v[i - 1])
            throw shape_error(std::string(what) + " must be strictly decreasing");
    }
}

} // namespace

Partition from_frobenius(const Frobenius& f) {
    if (f.arms.size() != f.legs.size())
        throw shape_error("from_frobenius: arm and leg lists differ in length");
    check_strict_nonneg(f.arms, "Frobenius arms");
    check_strict_nonneg(f.legs, "Frobenius legs");
    int r = static_cast<int>(f.arms.size());
    std::vector<int> parts;
    for (int i = 0; i < r; ++i) parts.push_back(f.arms[i] + i + 1);
    // Rows below the diagonal block are determined by the column heights
    // legs[j] + j + 1.
    for (int i = r;; ++i) {
        int row = 0;
        for (int j = 0; j < r; ++j)
            if (f.legs[j] + j + 1 > i) ++row;
        if (row == 0) break;
        parts.push_back(row);
    }
    return Partition(std::move(parts));
}

Partition hook_partition(int arm, int leg) {
    std::vector<int> parts{arm + 1};
    parts.insert(parts.end(), leg, 1);
    return Partition(std::move(parts));
}

std::pair<Partition, Partition> doubles(const std::vector<int>& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 1) throw shape_error("doubles: alpha parts must be positive");
        if (i > 0 && alpha[i] >= alpha[i - 1])
            throw shape_error("doubles: alpha must be strictly decreasing");
    }
    std::vector<int> minus;
    for (int a : alpha) minus.push_back(a - 1);
    Partition d = from_frobenius({alpha, minus});
    Partition dprime = from_frobenius({minus, alpha});
    return {d, dprime};
}

bool PartitionOrder::operator()(const Partition& a, const Partition& b) const {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return b.parts() < a.parts(); // descending lexicographic within a weight
}

namespace {

void gen_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
             std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_rec(remaining - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int max_weight, int max_length) {
    std::vector<Partition> out;
    std::vector<int> cur;
    for (int w = 0; w <= max_weight; ++w)
        gen_rec(w, w, max_length, cur, out); // first-part-descending = desc lex
    return out;
}

namespace {

void gen_strict(int remaining_budget, int max_part, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int p = std::min(remaining_budget, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_strict(remaining_budget - p, p - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> enumerate_strict_partitions(int max_weight) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_strict(max_weight, max_weight, cur, out);
    return out;
}

} // namespace genschur
