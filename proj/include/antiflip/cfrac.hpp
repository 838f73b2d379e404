#pragma once

// Hirzebruch-Jung continued fractions.
//
//   n/a = e_1 - 1/(e_2 - 1/(... - 1/e_s)),   every e_i >= 2,
//
// the self-intersection magnitudes of the minimal resolution chain of the
// cyclic quotient singularity 1/n(1,a).

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "antiflip/integer.hpp"

namespace antiflip {

/// A reduced fraction n/a with n > a >= 1 and gcd(n, a) = 1: the type of the
/// cyclic quotient singularity 1/n(1,a).
class Fraction {
public:
    /// Throws DomainError unless n > a >= 1 and gcd(n, a) = 1.
    Fraction(Integer n, Integer a);

    [[nodiscard]] const Integer& num() const noexcept { return num_; }
    [[nodiscard]] const Integer& den() const noexcept { return den_; }

    /// "(n,a)"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;

private:
    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

/// 1/n(1,a) and 1/n(1,a') are the same singularity when a*a' = 1 (mod n);
/// the two expansions are each other's reversal.
bool same_singularity(const Fraction& x, const Fraction& y);

/// A strict HJ continued fraction: non-empty, every entry >= 2.
class CFrac {
public:
    /// Throws DomainError on an empty list or an entry below 2.
    explicit CFrac(std::vector<Integer> entries);

    [[nodiscard]] const std::vector<Integer>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const Integer& operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] CFrac reversed() const;

    /// "[e_1,...,e_s]"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const CFrac&, const CFrac&) = default;

private:
    std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const CFrac& c);

/// Greedy ceiling expansion: e_1 = ceil(n/a), then continue with a/(e_1 a - n).
CFrac hj_expand(const Fraction& f);

/// Right-to-left evaluation of [e_1,...,e_s].
Fraction hj_evaluate(const CFrac& c);

/// The dual fraction n/(n-a) and its expansion.
std::pair<Fraction, CFrac> hj_dual(const Fraction& f);

/// Typographic minus (U+2212) and empty set (U+2205) used by all printed
/// notation, e.g. "[4]−3−∅".
inline constexpr const char* kMinus = "\u2212";
inline constexpr const char* kSmooth = "\u2205";

/// Comma-separated bracket rendering shared by every chain printer: "[3,5,2]".
std::string bracket_list(const std::vector<Integer>& entries);

}  // namespace antiflip
