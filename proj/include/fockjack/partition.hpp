#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "fockjack/errors.hpp"
#include "fockjack/rational.hpp"

namespace fockjack {

// Young diagram: weakly decreasing positive parts.  Zero parts are never
// stored, so the representation is unique.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (int p : parts)
            if (p < 0) throw OutOfRange("negative part in partition");
        parts_ = std::move(parts);
    }
    // m repeated n times
    static Partition rectangle(int m, int n) {
        if (m < 1 || n < 1) throw EmptyPartition("rectangle needs m, n >= 1");
        return Partition(std::vector<int>(static_cast<std::size_t>(n), m));
    }

    const std::vector<int>& parts() const { return parts_; }
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    int degree() const {
        int d = 0;
        for (int p : parts_) d += p;
        return d;
    }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> out(static_cast<std::size_t>(parts_[0]));
        for (int j = 1; j <= parts_[0]; ++j)
            out[static_cast<std::size_t>(j - 1)] =
                static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [j](int p) { return p >= j; }));
        return Partition(std::move(out));
    }

    struct BoxStats {
        int arm, leg, coarm, coleg;
    };
    // s = (i, j), 1-based
    BoxStats box_stats(int i, int j) const {
        if (i < 1 || j < 1 || static_cast<std::size_t>(i) > parts_.size() || j > parts_[i - 1])
            throw BoxOutOfDiagram{};
        Partition conj = conjugate();
        return {parts_[i - 1] - j, conj.parts_[j - 1] - i, j - 1, i - 1};
    }

    int multiplicity(int part) const {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }

    // z_lambda = prod_i i^{m_i} m_i!
    Rational z_factor() const {
        Rational z = 1;
        for (std::size_t i = 0; i < parts_.size();) {
            std::size_t j = i;
            while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
            std::size_t m = j - i;
            z *= rat_pow(rat(parts_[i]), static_cast<long>(m));
            for (std::size_t k = 2; k <= m; ++k) z *= rat(static_cast<long>(k));
            i = j;
        }
        return z;
    }

    Partition with_part(int p) const {
        std::vector<int> out = parts_;
        out.push_back(p);
        return Partition(std::move(out));
    }
    Partition without_part(int p) const {
        std::vector<int> out = parts_;
        auto it = std::find(out.begin(), out.end(), p);
        if (it == out.end()) throw OutOfRange("part not present");
        out.erase(it);
        return Partition(std::move(out));
    }

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    // lexicographic; together with equal degree this is reverse-lex order
    friend bool operator<(const Partition& x, const Partition& y) { return x.parts_ < y.parts_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
};

enum class Dominance { greater, less, equal, incomparable };

inline Dominance dominance_compare(const Partition& lam, const Partition& mu) {
    if (lam.degree() != mu.degree()) throw DegreeMismatch{};
    bool ge = true, le = true;
    long pa = 0, pb = 0;
    std::size_t n = std::max(lam.length(), mu.length());
    for (std::size_t k = 0; k < n; ++k) {
        pa += lam.part(k);
        pb += mu.part(k);
        if (pa < pb) ge = false;
        if (pa > pb) le = false;
    }
    if (ge && le) return Dominance::equal;
    if (ge) return Dominance::greater;
    if (le) return Dominance::less;
    return Dominance::incomparable;
}

inline bool dominates(const Partition& lam, const Partition& mu) {
    auto c = dominance_compare(lam, mu);
    return c == Dominance::greater || c == Dominance::equal;
}

// all partitions of d (length <= max_len when given), reverse-lexicographic,
// largest first: (d), (d-1,1), ..., (1^d)
inline std::vector<Partition> enumerate_partitions(int d, int max_len = -1) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(std::vector<int>(cur));
            return;
        }
        if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    if (d < 0) return out;
    rec(rec, d, d == 0 ? 1 : d);
    return out;
}

// partition count p(n) by the Euler pentagonal recurrence
inline std::vector<unsigned long long> partition_numbers(int n) {
    std::vector<unsigned long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            long long sign = (k % 2 == 0) ? -1 : 1;
            if (g1 <= m) total += sign * static_cast<long long>(p[static_cast<std::size_t>(m - g1)]);
            if (g2 <= m) total += sign * static_cast<long long>(p[static_cast<std::size_t>(m - g2)]);
        }
        p[static_cast<std::size_t>(m)] = static_cast<unsigned long long>(total);
    }
    return p;
}

}  // namespace fockjack
