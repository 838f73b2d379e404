#pragma once

// Wahl singularities 1/m^2(1, ma-1) and their resolution chains.

#include <iosfwd>
#include <optional>
#include <string>

#include "antiflip/cfrac.hpp"
#include "antiflip/integer.hpp"

namespace antiflip {

/// The pair (m,a) of the Wahl singularity 1/m^2(1, ma-1). The pair (1,1) is
/// the smooth-point sentinel and is a valid value in its own right.
class WahlPair {
public:
    /// Throws DomainError unless (m,a) = (1,1) or m > a >= 1 with gcd 1.
    WahlPair(Integer m, Integer a);

    static WahlPair smooth() { return WahlPair(); }

    /// Skips validation. For producers whose output is coprime and in range
    /// by construction (Mori recursions); tests check those producers.
    static WahlPair trusted(Integer m, Integer a) { return WahlPair(std::move(m), std::move(a), Unchecked{}); }

    [[nodiscard]] const Integer& m() const noexcept { return m_; }
    [[nodiscard]] const Integer& a() const noexcept { return a_; }
    [[nodiscard]] bool is_smooth() const noexcept { return m_ == 1; }

    /// "(m,a)"
    [[nodiscard]] std::string str() const;

    friend bool operator==(const WahlPair&, const WahlPair&) = default;

private:
    struct Unchecked {};
    WahlPair() : m_(1), a_(1) {}
    WahlPair(Integer m, Integer a, Unchecked) : m_(std::move(m)), a_(std::move(a)) {}

    Integer m_;
    Integer a_;
};

std::ostream& operator<<(std::ostream& os, const WahlPair& w);

/// Expansion of m^2/(ma-1) by direct HJ expansion.
CFrac wahl_chain_direct(const WahlPair& w);

/// The same chain glued from m/a = [a_1..a_p] and m/(m-a) = [b_1..b_q]:
///   [a_1, .., a_{p-1}, a_p + b_q, b_{q-1}, .., b_1].
CFrac wahl_chain_glued(const WahlPair& w);

/// The resolution chain of w, computed both ways; a disagreement throws
/// InvariantViolation. Throws DomainError for the smooth sentinel.
///
/// Orientation: the list is m^2/(ma-1) read left to right, so that
/// reverse(wahl_chain(m,a)) == wahl_chain(m,m-a).
CFrac wahl_chain(const WahlPair& w);

/// The pair whose Wahl chain is exactly c, if any.
std::optional<WahlPair> recognize_wahl(const CFrac& c);

/// (m,a) -> (m,m-a): the same singularity read from the other end.
WahlPair conjugate(const WahlPair& w);

/// Whichever of (m,a), (m,m-a) has the smaller second entry; the label used
/// for the rational homology ball B_{m,a}.
WahlPair canonical(const WahlPair& w);

}  // namespace antiflip
