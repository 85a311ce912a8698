#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tchrom {

using Int = std::int64_t;

// Overflow-checked integer arithmetic. Every count in the library goes
// through these; wraparound throws std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// A sequence of positive integers. Indices at the public surface are
/// 1-based (`part(1)` is the first entry); `operator[]` is 0-based.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    int part(std::size_t i) const;  // 1-based
    int operator[](std::size_t i) const { return parts_[i]; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// "(1,2,1)"; the empty composition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    Composition as_composition() const { return Composition(parts_); }
    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

Partition sort_composition(const Composition& alpha);
Composition reverse_composition(const Composition& alpha);

/// Entries strictly left and right of the i-th part (1-based), with
/// their sizes. The first part has left_size 0, the last right_size 0.
struct Split {
    Composition left;
    Composition right;
    int left_size = 0;
    int right_size = 0;
};
Split split_at(const Composition& alpha, std::size_t i);

/// |a|! / prod a_i!. Zero entries are allowed (weak compositions); the
/// empty sequence gives 1.
Int multinomial(std::span<const int> parts);
Int multinomial(const Composition& alpha);
Int multinomial(const Partition& lambda);

/// Binomial coefficient, 0 outside 0 <= k <= n.
Int binomial(Int n, Int k);

Int factorial(int n);

struct PartitionStats {
    int ones = 0;       // a_1(lambda)
    Partition tilde;    // lambda with its last part removed
};
PartitionStats partition_stats(const Partition& lambda);

/// All 2^(n-1) compositions of n in lexicographic order of parts.
std::vector<Composition> enumerate_compositions(int n);

/// All partitions of n in lexicographic order of parts.
std::vector<Partition> enumerate_partitions(int n);

/// Distinct rearrangements of a partition, lexicographic.
std::vector<Composition> rearrangements(const Partition& lambda);

}  // namespace tchrom
