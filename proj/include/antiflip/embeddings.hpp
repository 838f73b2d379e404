#pragma once

// Disjoint pairs of rational homology balls B_{p,q} read off Mori sequences.
//
// Three ambient spaces are supported: the plumbing V of a linear chain Γ, a
// ball B_{n,a} blown up once, and the Milnor fiber of an extremal
// P-resolution with one Wahl point. In each case consecutive members of the
// relevant Mori sequence(s) give the balls B_{d_i,c_i}, B_{d_{i+1},c_{i+1}}.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "antiflip/cfrac.hpp"
#include "antiflip/integer.hpp"
#include "antiflip/mori.hpp"
#include "antiflip/wahl.hpp"

namespace antiflip {

struct ChainNbhd {
    CFrac gamma;
    friend bool operator==(const ChainNbhd&, const ChainNbhd&) = default;
};

struct BlownUpBall {
    WahlPair w;  // never smooth
    friend bool operator==(const BlownUpBall&, const BlownUpBall&) = default;
};

struct MilnorFiber {
    PResolution p;
    Fraction q_type;  // presolution_target(p)
    friend bool operator==(const MilnorFiber&, const MilnorFiber&) = default;
};

using Target = std::variant<ChainNbhd, BlownUpBall, MilnorFiber>;

/// "V[4]", "B_{2,1}#CP2bar", "M([4]−3)"
std::string describe(const Target& t);

enum class Simplicity { simple, simple_for_later, non_simple, none };

/// "simple" / "simple-for-i>1" / "non-simple" / "none"
const char* simplicity_name(Simplicity s);
/// Inverse of simplicity_name; throws DomainError on anything else.
Simplicity parse_simplicity(const std::string& s);

struct EmbeddingStep {
    std::size_t family = 1;  // 1-based; only Milnor fibers have two
    MoriStep step;
    WahlPair canonical1;  // canonical(step.nbhd.w1())
    WahlPair canonical2;  // canonical(step.nbhd.w2())

    friend bool operator==(const EmbeddingStep&, const EmbeddingStep&) = default;
};

/// Builds the step record for member `step` of family `family`.
EmbeddingStep make_embedding_step(std::size_t family, MoriStep step);

struct EmbeddingReport {
    Target target;
    std::optional<Integer> delta;  // empty reports have none
    bool infinite = false;
    Simplicity simplicity = Simplicity::none;
    std::vector<EmbeddingStep> steps;
    std::string reason;  // why the report is empty

    friend bool operator==(const EmbeddingReport&, const EmbeddingReport&) = default;
};

/// The mk1A ((1,1),(n,n-a)) with (n,a) = [e_1, .., e_t - 1]; delta = n - a.
/// Throws DomainError when e_t = 2.
ExtremalNbhd usual_initial(const CFrac& gamma);

/// Usual flips from usual_initial(gamma) until the fiber is smooth. The c
/// values reproduce gamma.
std::vector<UsualFlip> usual_flip_sequence(const CFrac& gamma);

/// Balls in the plumbing of gamma, k Mori steps. An e_t = 2 chain gives an
/// empty report with the reason filled in.
EmbeddingReport embed_linear(const CFrac& gamma, std::size_t k);

/// Balls in B_{n,a} blown up once, from the divisorial family
/// ((n,a), (n^2, n^2 - (na-1))).
EmbeddingReport embed_blowup(const WahlPair& w, std::size_t k);

/// Balls in the Milnor fiber of p, k steps of each family of
/// initial_neighborhoods(p). p must have exactly one Wahl point.
EmbeddingReport embed_milnor(const PResolution& p, std::size_t k);
/// The same for the P-resolution [wahl_chain(w) reversed]−c with a smooth
/// second side.
EmbeddingReport embed_milnor(const WahlPair& w, const Integer& c, std::size_t k);

}  // namespace antiflip
