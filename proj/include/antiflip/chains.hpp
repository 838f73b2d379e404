#pragma once

// Linear chains of rational curves as rewritable integer sequences.
//
// Entry k stands for a curve of self-intersection -k. Entries equal to 1 are
// (-1)-curves and can be blown down; 0 only shows up as the terminal normal
// form of a chain that contracts completely, e.g. [e..., 1, b...] -> [0].

#include <iosfwd>
#include <string>
#include <vector>

#include "antiflip/cfrac.hpp"
#include "antiflip/integer.hpp"

namespace antiflip {

class Chain {
public:
    Chain() = default;
    /// Throws DomainError on a negative entry.
    explicit Chain(std::vector<Integer> entries);
    explicit Chain(const CFrac& c) : entries_(c.entries()) {}

    [[nodiscard]] const std::vector<Integer>& entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
    [[nodiscard]] const Integer& operator[](std::size_t i) const { return entries_[i]; }

    /// The chain as a strict HJ fraction; throws DomainError if any entry < 2.
    [[nodiscard]] CFrac to_cfrac() const { return CFrac(entries_); }

    [[nodiscard]] std::string str() const { return bracket_list(entries_); }

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const Chain& c);

/// Concatenation of chains, in order.
Chain concat(std::initializer_list<Chain> parts);

enum class End { left, right };

/// Contracts the (-1)-curve at index i: it disappears and each neighbor's
/// magnitude drops by one.
Chain blow_down_at(const Chain& c, std::size_t i);

/// Blows up the node between entries i and i+1: inserts a 1 and bumps both
/// neighbors. blow_down_at(result, i + 1) == c.
Chain blow_up_between(const Chain& c, std::size_t i);

/// Blows up a general point of the end curve: appends/prepends a 1 and bumps
/// the adjacent entry (if any).
Chain blow_up_at_end(const Chain& c, End end);

/// Repeatedly contracts the leftmost 1 until none is left. A lone [1]
/// contracts to the empty chain, [1,1] to [0].
Chain reduce(const Chain& c);

/// Like reduce, also reporting how many blow-downs were performed.
struct Reduction {
    Chain normal_form;
    std::size_t blow_downs = 0;
};
Reduction reduce_counted(const Chain& c);

Chain reverse(const Chain& c);

/// For n/a = [a_1..a_p] and n/(n-a) = [b_1..b_q], the blow-up of the end
/// vertex a_p:
///   [a_1..a_{p-1}, a_p + b_q, b_{q-1}..b_1, 1, a_1..a_p].
/// The part before the 1 is the Wahl chain of (n,a); the whole chain reduces
/// back to [a_1..a_p].
Chain corollary_chain(const Fraction& f);

/// Graphviz rendering as a path graph with nodes labeled "-k". Nodes whose
/// index is flagged in `contracted` are drawn as boxes (curves contracted to a
/// Wahl singularity), the rest as circles.
std::string to_dot(const Chain& c, const std::vector<bool>& contracted = {}, const std::string& name = "chain");

}  // namespace antiflip
