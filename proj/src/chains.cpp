#include "antiflip/chains.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "antiflip/errors.hpp"

namespace antiflip {

Chain::Chain(std::vector<Integer> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.sign() < 0) throw DomainError("chain entry " + e.str() + " is negative");
    }
}

std::ostream& operator<<(std::ostream& os, const Chain& c) { return os << c.str(); }

Chain concat(std::initializer_list<Chain> parts) {
    std::vector<Integer> out;
    for (const auto& p : parts) out.insert(out.end(), p.entries().begin(), p.entries().end());
    return Chain(std::move(out));
}

namespace {

void blow_down_in_place(std::vector<Integer>& e, std::size_t i) {
    if (i >= e.size()) {
        throw DomainError("blow-down index " + std::to_string(i) + " out of range for chain of length " +
                          std::to_string(e.size()));
    }
    if (e[i] != 1) throw DomainError("entry " + std::to_string(i) + " is " + e[i].str() + ", not a (-1)-curve");
    if (i > 0 && e[i - 1] == 0) throw DomainError("blow-down would make a self-intersection positive");
    if (i + 1 < e.size() && e[i + 1] == 0) throw DomainError("blow-down would make a self-intersection positive");
    if (i > 0) e[i - 1] -= 1;
    if (i + 1 < e.size()) e[i + 1] -= 1;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(i));
}

}  // namespace

Chain blow_down_at(const Chain& c, std::size_t i) {
    std::vector<Integer> e = c.entries();
    blow_down_in_place(e, i);
    return Chain(std::move(e));
}

Chain blow_up_between(const Chain& c, std::size_t i) {
    if (i + 1 >= c.size()) {
        throw DomainError("no node between entries " + std::to_string(i) + " and " + std::to_string(i + 1) +
                          " in a chain of length " + std::to_string(c.size()));
    }
    std::vector<Integer> e = c.entries();
    e[i] += 1;
    e[i + 1] += 1;
    e.insert(e.begin() + static_cast<std::ptrdiff_t>(i + 1), Integer(1));
    return Chain(std::move(e));
}

Chain blow_up_at_end(const Chain& c, End end) {
    std::vector<Integer> e = c.entries();
    if (end == End::right) {
        if (!e.empty()) e.back() += 1;
        e.emplace_back(1);
    } else {
        if (!e.empty()) e.front() += 1;
        e.insert(e.begin(), Integer(1));
    }
    return Chain(std::move(e));
}

Reduction reduce_counted(const Chain& c) {
    std::vector<Integer> e = c.entries();
    std::size_t count = 0;
    // Contracting position i can only create a new 1 at i-1 or i, so the scan
    // restarts one step back instead of from the left end.
    std::size_t i = 0;
    while (i < e.size()) {
        if (e[i] == 1) {
            blow_down_in_place(e, i);
            ++count;
            i = i > 0 ? i - 1 : 0;
        } else {
            ++i;
        }
    }
    return {Chain(std::move(e)), count};
}

Chain reduce(const Chain& c) { return reduce_counted(c).normal_form; }

Chain reverse(const Chain& c) {
    std::vector<Integer> e(c.entries().rbegin(), c.entries().rend());
    return Chain(std::move(e));
}

Chain corollary_chain(const Fraction& f) {
    CFrac a = hj_expand(f);
    CFrac b = hj_dual(f).second;
    std::vector<Integer> out(a.entries().begin(), a.entries().end() - 1);
    out.push_back(a.entries().back() + b.entries().back());
    out.insert(out.end(), b.entries().rbegin() + 1, b.entries().rend());
    out.emplace_back(1);
    out.insert(out.end(), a.entries().begin(), a.entries().end());
    return Chain(std::move(out));
}

std::string to_dot(const Chain& c, const std::vector<bool>& contracted, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        bool box = i < contracted.size() && contracted[i];
        os << "  n" << i << " [label=\"" << kMinus << c[i] << "\", shape=" << (box ? "box" : "circle") << "];\n";
    }
    for (std::size_t i = 0; i + 1 < c.size(); ++i) os << "  n" << i << " -- n" << i + 1 << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace antiflip
