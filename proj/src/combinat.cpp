#include "tchrom/combinat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace tchrom {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

namespace {

int sum_parts(const std::vector<int>& parts) {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string format_parts(const std::vector<int>& parts) {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 1) throw std::invalid_argument("composition parts must be positive");
    weight_ = sum_parts(parts_);
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

int Composition::part(std::size_t i) const {
    if (i < 1 || i > parts_.size()) throw std::out_of_range("composition index out of range");
    return parts_[i - 1];
}

std::string Composition::to_string() const { return format_parts(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    weight_ = sum_parts(parts_);
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

std::string Partition::to_string() const { return format_parts(parts_); }

Partition sort_composition(const Composition& alpha) {
    std::vector<int> parts = alpha.parts();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Composition reverse_composition(const Composition& alpha) {
    return Composition(std::vector<int>(alpha.parts().rbegin(), alpha.parts().rend()));
}

Split split_at(const Composition& alpha, std::size_t i) {
    if (i < 1 || i > alpha.length()) throw std::out_of_range("split_at: index out of range");
    const auto& p = alpha.parts();
    Split out;
    out.left = Composition(std::vector<int>(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i - 1)));
    out.right = Composition(std::vector<int>(p.begin() + static_cast<std::ptrdiff_t>(i), p.end()));
    out.left_size = out.left.weight();
    out.right_size = out.right.weight();
    return out;
}

Int multinomial(std::span<const int> parts) {
    // Product of binomials C(a_1+...+a_k, a_k) keeps intermediates small.
    Int result = 1;
    Int running = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative entry");
        running += p;
        result = checked_mul(result, binomial(running, p));
    }
    return result;
}

Int multinomial(const Composition& alpha) { return multinomial(std::span<const int>(alpha.parts())); }
Int multinomial(const Partition& lambda) { return multinomial(std::span<const int>(lambda.parts())); }

Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (Int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i; divide first by the gcd to delay overflow.
        Int num = n - k + i;
        Int g = std::gcd(r, i);
        r = checked_mul(r / g, num / (i / g));
    }
    return r;
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
    return r;
}

PartitionStats partition_stats(const Partition& lambda) {
    if (lambda.empty()) throw std::invalid_argument("partition_stats: empty partition has no tilde");
    PartitionStats st;
    st.ones = static_cast<int>(std::count(lambda.begin(), lambda.end(), 1));
    st.tilde = Partition(std::vector<int>(lambda.begin(), lambda.end() - 1));
    return st;
}

namespace {

void compositions_rec(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        compositions_rec(remaining - p, prefix, out);
        prefix.pop_back();
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = 1; p <= std::min(remaining, max_part); ++p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_compositions: negative n");
    std::vector<Composition> out;
    std::vector<int> prefix;
    compositions_rec(n, prefix, out);
    return out;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::vector<Composition> rearrangements(const Partition& lambda) {
    std::vector<int> parts(lambda.begin(), lambda.end());
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

}  // namespace tchrom
