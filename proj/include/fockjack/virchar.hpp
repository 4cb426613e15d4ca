#pragma once

#include <array>
#include <set>

#include "fockjack/fock.hpp"

namespace fockjack {

// Truncated q-character sum_k c_k q^{offset + k}.  Two series are comparable
// only when their offsets differ by an integer; mixing others is reported.
class CharSeries {
public:
    CharSeries() : offset_(0) {}
    CharSeries(Rational offset, std::vector<long long> coeffs)
        : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
        trim();
    }

    const Rational& offset() const { return offset_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    long long coeff_at(const Rational& h) const;
    // adds c * q^h; h - offset must be a non-negative... any integer shift is
    // handled by re-anchoring the offset
    void add_at(const Rational& h, long long c);
    void add(const CharSeries& other, long long mult = 1);
    // drop everything above the window (inclusive cutoff)
    void truncate_above(const Rational& window);

    bool aligned_with(const CharSeries& other) const;
    friend bool operator==(const CharSeries& x, const CharSeries& y) {
        if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
        return x.offset_ == y.offset_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CharSeries& x, const CharSeries& y) { return !(x == y); }

    std::string str(std::size_t max_terms = 12) const;

private:
    void trim();
    Rational offset_;
    std::vector<long long> coeffs_;  // coeffs_[k] multiplies q^{offset_+k}
};

// ch F_{r,s;n} up to q^{h + L}: offset h_{r,s;n}, coefficients p(0..L)
CharSeries fock_character(const ModelParams& m, int r, int s, int n, int L);

// same, generated up to an absolute weight window (offsets in one Fock family
// are not monotone, so window-based sums need more than L orders)
CharSeries fock_character_window(const ModelParams& m, int r, int s, int n,
                                 const Rational& window);

enum class SocleCase { I, IIplus, IIminus, III };

struct SocleComponent {
    std::string name;                     // S1, S2a, S2b, S2, S3
    std::vector<std::array<int, 3>> labels;  // (r,s,n) of each constituent in window
};

struct SocleData {
    int r, s, n;
    SocleCase which;
    std::vector<SocleComponent> components;
};

// constituents of F_{r,s;n} with weight <= h_{r,s;n} + L
SocleData socle_constituents(const ModelParams& m, int r, int s, int n, int L);
// same with an absolute weight window
SocleData socle_constituents_window(const ModelParams& m, int r, int s, int n,
                                    const Rational& window);

// characters of the simple modules L(h), keyed by exact weight, solved
// triangularly from the socle data; every socle equation re-verified
class SimpleCharacters {
public:
    SimpleCharacters(const ModelParams& m, int L);
    const CharSeries& at(const Rational& h) const;
    CharSeries sum_over(const std::vector<Rational>& weights) const;
    const ModelParams& model() const { return model_; }
    int cutoff() const { return L_; }
    Rational window() const { return window_; }

private:
    const CharSeries& solve(const Rational& h) const;
    ModelParams model_;
    int L_;
    Rational window_;  // global comparison window: max handled weight
    std::map<Rational, std::array<int, 3>> label_of_;
    mutable std::map<Rational, CharSeries> solved_;
    mutable std::set<Rational> in_progress_;
};

SimpleCharacters solve_simple_characters(const ModelParams& m, int L);

// Euler characteristic of the S+ Felder complex through F_{r,s;0}:
// sum_k ch F_{r,s;2k} - sum_k ch F_{p+-r,s;2k+1}; equals ch L(h_{r,s;0})
// for s < p-, and 0 for s = p-
CharSeries felder_euler(const ModelParams& m, int r, int s, int L);

// kernel/image constituents (4.2 lists; X indexed by ambient Fock module)
std::vector<Rational> kernel_weights(const ModelParams& m, int r, int s, int n, char sign,
                                     const Rational& window);
std::vector<Rational> image_weights(const ModelParams& m, int r, int s, int n, char sign,
                                    const Rational& window);
// intersections K_{r,s;n} / X_{r,s;n} (multiset intersection; boundary rows
// use S1(F) directly)
std::vector<Rational> kn_weights(const ModelParams& m, int r, int s, int n, const Rational& window);
std::vector<Rational> xn_weights(const ModelParams& m, int r, int s, int n, const Rational& window);

struct KxCertificate {
    bool pass;
    CharSeries route_sum;      // from the 4.2 socle lists over the Fock family
    CharSeries route_modules;  // sum_n dim V^pm ch L(Delta^pm)
    CharSeries kernel_char;    // ch K^pm
    bool exact_sequence_pass;  // ch K+ = ch X+ + ch L(h_{r,s;0}) (resp. K- = X-)
    std::string detail;
};

KxCertificate kx_characters(const ModelParams& m, int r, int s, char sign, int L);
// same, reusing an already-solved character table
KxCertificate kx_characters(const SimpleCharacters& solver, int r, int s, char sign, int L);

}  // namespace fockjack
