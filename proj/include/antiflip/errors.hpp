#pragma once

#include <stdexcept>
#include <string>

namespace antiflip {

/// A caller handed in data outside an operation's domain (bad pair, wrong
/// neighborhood kind, malformed chain). Maps to CLI exit status 2.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identity that must hold for all valid inputs failed. Always a bug in
/// this library; maps to CLI exit status 3.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace antiflip
