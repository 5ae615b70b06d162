#pragma once

#include <compare>
#include <string>
#include <vector>

namespace genschur {

// Integer partition: weakly decreasing positive parts. The empty sequence is
// the zero partition (0).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates shape

    static Partition zero() { return Partition(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool is_zero() const { return parts_.empty(); }

    /// part(i) with the convention part(i) = 0 for i >= length(), 0-based.
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    int first() const { return part(0); }

    Partition conjugate() const;
    bool contains(const Partition& mu) const; // pointwise domination

    /// Particle coordinates l_i = lambda_i - i + n for i = 1..len (1-based
    /// formula), returned 0-based as l[a] = part(a) - a + n - 1, strictly
    /// decreasing. Requires length() <= n and len >= length().
    std::vector<int> particle_coords(int n, int len) const;

    /// Frobenius rank: number of diagonal cells of the Young diagram.
    int frobenius_rank() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool operator!=(const Partition& other) const { return parts_ != other.parts_; }

    std::string str() const; // "(3,1)" or "(0)"

private:
    std::vector<int> parts_;
};

// Arm/leg lengths along the main diagonal: arms strictly decreasing >= 0,
// legs strictly decreasing >= 0, equal length = Frobenius rank.
struct Frobenius {
    std::vector<int> arms;
    std::vector<int> legs;
};

Frobenius frobenius(const Partition& lambda);
Partition from_frobenius(const Frobenius& f);

/// Hook partition (a|b) = (1 + a, 1^b).
Partition hook_partition(int arm, int leg);

/// Littlewood doubles of a strict partition alpha: D(alpha) has Frobenius
/// form (alpha | alpha - 1), Dprime(alpha) has (alpha - 1 | alpha).
std::pair<Partition, Partition> doubles(const std::vector<int>& alpha);

/// Canonical order: ascending weight, then descending lexicographic.
struct PartitionOrder {
    bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions with weight <= max_weight and length <= max_length, in
/// canonical order. Pass max_length >= max_weight for unbounded length.
std::vector<Partition> enumerate_partitions(int max_weight, int max_length);

/// Strict partitions (distinct positive parts) with weight <= max_weight,
/// deterministic order, including the empty one.
std::vector<std::vector<int>> enumerate_strict_partitions(int max_weight);

} // namespace genschur
