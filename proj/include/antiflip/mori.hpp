#pragma once

// Extremal neighborhoods of type mk1A/mk2A, Mori sequences and flips.
//
// An extremal neighborhood is recorded by two Wahl pairs w1 = (m1,a1) and
// w2 = (m2,a2); an mk1A is the case w1 = (1,1). Its minimal resolution is
//
//   reverse(wahl_chain(w2)) - 1 - wahl_chain(w1)
//
// with the flipping curve as the (-1)-curve in the middle, and it is printed
// "[f_s,..,f_1]−[e_1,..,e_r]". The invariant
//
//   delta = m2*a1 + m1*a2 - m1*m2 >= 1,   K.C = -delta/(m1*m2),
//
// together with the sign of delta*m1 - m2 decides whether the neighborhood
// starts a flipping family (< 0), a divisorial family (= 0), or sits further
// along some Mori sequence (> 0).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "antiflip/cfrac.hpp"
#include "antiflip/chains.hpp"
#include "antiflip/integer.hpp"
#include "antiflip/wahl.hpp"

namespace antiflip {

enum class NbhdKind { initial_flipping, initial_divisorial, non_initial };

/// "flipping" / "divisorial" / "non-initial"
const char* kind_name(NbhdKind k);

class ExtremalNbhd {
public:
    /// Initial-position neighborhood: w2 singular, m2 > m1 when w1 is
    /// singular, delta >= 1. Throws DomainError otherwise.
    static ExtremalNbhd initial(WahlPair w1, WahlPair w2);

    /// Any neighborhood on a Mori sequence, in either reading direction: at
    /// least one side singular and delta >= 1.
    static ExtremalNbhd member(WahlPair w1, WahlPair w2);

    /// Skips validation; `delta` must equal delta_of(w1, w2). Used by the
    /// recursions, which produce valid members by construction.
    static ExtremalNbhd trusted(WahlPair w1, WahlPair w2, Integer delta) {
        return ExtremalNbhd(std::move(w1), std::move(w2), std::move(delta));
    }

    [[nodiscard]] const WahlPair& w1() const noexcept { return w1_; }
    [[nodiscard]] const WahlPair& w2() const noexcept { return w2_; }
    [[nodiscard]] const Integer& delta() const noexcept { return delta_; }
    /// K.C = -delta/(m1 m2), reduced.
    [[nodiscard]] Rational kc() const;

    /// The same neighborhood read from the other end (w1 and w2 swapped).
    [[nodiscard]] ExtremalNbhd mirrored() const;
    /// Equal as a neighborhood, i.e. up to reading direction.
    [[nodiscard]] bool equivalent(const ExtremalNbhd& other) const;

    friend bool operator==(const ExtremalNbhd&, const ExtremalNbhd&) = default;

private:
    ExtremalNbhd(WahlPair w1, WahlPair w2, Integer delta)
        : w1_(std::move(w1)), w2_(std::move(w2)), delta_(std::move(delta)) {}

    WahlPair w1_;
    WahlPair w2_;
    Integer delta_;
};

Integer delta_of(const WahlPair& w1, const WahlPair& w2);

/// An extremal P-resolution [f_s,..,f_1]−c−[e_1,..,e_r]: a single curve of
/// self-intersection -c through at most two Wahl points, w2p on the left and
/// w1p on the right (smooth sides are the (1,1) sentinel).
class PResolution {
public:
    /// Throws DomainError unless c >= 1 and
    ///   delta = c*m1'*m2' - m1'*a2' - m2'*a1' >= 1.
    /// The delta bound forces c >= 2 with a smooth side and c >= 3 with two;
    /// c = 1 needs two Wahl points, e.g. [4]−1−[5,2].
    PResolution(WahlPair w1p, WahlPair w2p, Integer c);

    [[nodiscard]] const WahlPair& w1p() const noexcept { return w1p_; }
    [[nodiscard]] const WahlPair& w2p() const noexcept { return w2p_; }
    [[nodiscard]] const Integer& c() const noexcept { return c_; }
    [[nodiscard]] const Integer& delta() const noexcept { return delta_; }
    [[nodiscard]] std::size_t singular_sides() const noexcept {
        return (w1p_.is_smooth() ? 0 : 1) + (w2p_.is_smooth() ? 0 : 1);
    }

    /// Skips validation; `delta` must equal presolution_delta(w1p, w2p, c).
    static PResolution trusted(WahlPair w1p, WahlPair w2p, Integer c, Integer delta) {
        return PResolution(std::move(w1p), std::move(w2p), std::move(c), std::move(delta));
    }

    [[nodiscard]] PResolution mirrored() const { return trusted(w2p_, w1p_, c_, delta_); }
    /// Equal as a partial resolution, i.e. up to reading direction.
    [[nodiscard]] bool equivalent(const PResolution& other) const;

    friend bool operator==(const PResolution&, const PResolution&) = default;

private:
    PResolution(WahlPair w1p, WahlPair w2p, Integer c, Integer delta)
        : w1p_(std::move(w1p)), w2p_(std::move(w2p)), c_(std::move(c)), delta_(std::move(delta)) {}

    WahlPair w1p_;
    WahlPair w2p_;
    Integer c_;
    Integer delta_;
};

/// delta of a would-be P-resolution, without validating it.
Integer presolution_delta(const WahlPair& w1p, const WahlPair& w2p, const Integer& c);

/// One member E_i of a Mori sequence. The recursion state is read off the
/// pairs: E_i is (d_i, c_i), (d_{i+1}, d_{i+1} - c_{i+1}).
struct MoriStep {
    std::size_t index = 1;
    ExtremalNbhd nbhd;

    [[nodiscard]] const Integer& d() const noexcept { return nbhd.w1().m(); }
    [[nodiscard]] const Integer& c() const noexcept { return nbhd.w1().a(); }
    [[nodiscard]] const Integer& d_next() const noexcept { return nbhd.w2().m(); }
    [[nodiscard]] Integer c_next() const { return nbhd.w2().m() - nbhd.w2().a(); }

    friend bool operator==(const MoriStep&, const MoriStep&) = default;
};

NbhdKind classify(const ExtremalNbhd& e);

/// Iterator-style producer of the Mori sequence of an initial neighborhood:
///   d(1) = m1, d(2) = m2, d(i+1) = delta*d(i) - d(i-1),
///   c(1) = a1, c(2) = m2 - a2, c(i+1) = delta*c(i) - c(i-1).
/// Infinite for delta >= 2; exactly two members for delta = 1.
class MoriSequence {
public:
    /// Throws DomainError when e is not initial.
    explicit MoriSequence(const ExtremalNbhd& e);

    std::optional<MoriStep> next();
    [[nodiscard]] bool finite() const noexcept { return delta_ == 1; }
    [[nodiscard]] const Integer& delta() const noexcept { return delta_; }

private:
    Integer delta_;
    Integer d_prev_, c_prev_;
    Integer d_, c_;
    std::size_t index_ = 0;
    std::optional<ExtremalNbhd> first_;
};

/// The first min(k, length) members of the Mori sequence of e.
std::vector<MoriStep> mori_sequence(const ExtremalNbhd& e, std::size_t k);

/// Where a neighborhood sits on its Mori sequence: the initial member and the
/// 1-based position of e. Found by running the recursions backwards;
/// throws DomainError when e lies on no Mori sequence.
struct SequenceOrigin {
    ExtremalNbhd initial;
    Integer index;
};
SequenceOrigin sequence_origin(const ExtremalNbhd& e);

/// The extremal P-resolution shared by the flipping family of e:
///   m2' = m1, a2' = m1 - a1 (a2' = 1 if m1 = a1 = 1),
///   m1' = m2 - delta*m1, a1' = m2 - a2 - delta*a1 (mod m1'),
///   c = (delta + m1'*a2' + m2'*a1') / (m1'*m2'),
/// evaluated on the initial member of e's sequence. Throws DomainError for
/// divisorial families.
PResolution flip(const ExtremalNbhd& e);

/// flip() always evaluated in Integer arithmetic. flip() itself takes an
/// int64 shortcut when every input is below 2^30 and defers here on any
/// irregularity; the two must agree.
PResolution flip_exact(const ExtremalNbhd& e);

/// The initial flipping neighborhoods whose flip is p, one per side of p
/// (one when both sides coincide), ordered by m1. For the side read as (m1, m1 - a1):
///   m2 = m_other + delta*m1,  a2 = (delta + m1*m2 - m2*a1) / m1.
std::vector<ExtremalNbhd> initial_neighborhoods(const PResolution& p);

/// The Wahl singularity that a divisorial family contracts to: (m1,a1) of the
/// initial member. Throws DomainError for flipping families.
WahlPair divisorial_target(const ExtremalNbhd& e);

/// One flip of the usual mk1A: for w stored as (n, n-a) read the chain
/// wahl_chain(n,a) = [e_1..e_s] and let e_{i0} be its last entry >= 3. The
/// flip is e_1 − [e_2, .., e_{i0} - 1]; when i0 = 1 it is the smooth curve
/// of self-intersection -(e_1 - 1).
struct UsualFlip {
    Integer c;
    WahlPair next;  ///< recognized from [e_2..e_{i0}-1]; smooth when i0 = 1

    /// c−[next] as a P-resolution (next on the w1p side).
    [[nodiscard]] PResolution presolution() const { return PResolution(next, WahlPair::smooth(), c); }
};
UsualFlip usual_flip_step(const WahlPair& w);

/// "[f_s,..,f_1]−[e_1,..,e_r]", smooth sides printed "∅".
std::string display(const ExtremalNbhd& e);
/// "[f_s,..,f_1]−c−[e_1,..,e_r]", smooth sides printed "∅".
std::string display(const PResolution& p);
/// As display(p) but with smooth sides dropped: "[4]−3".
std::string display_compact(const PResolution& p);

/// Minimal-resolution chain reverse(wahl_chain(w2)) ++ [1] ++ wahl_chain(w1),
/// together with which entries are contracted to Wahl points.
struct ResolutionChain {
    Chain chain;
    std::vector<bool> contracted;
};
ResolutionChain resolution_chain(const ExtremalNbhd& e);
ResolutionChain resolution_chain(const PResolution& p);

/// The cyclic quotient singularity (Q in Y) obtained by contracting the
/// whole exceptional configuration of p.
Fraction presolution_target(const PResolution& p);

/// The same for a neighborhood: contract C together with both Wahl chains.
Fraction contracted_type(const ExtremalNbhd& e);

}  // namespace antiflip
