#pragma once

#include <stdexcept>
#include <string>

namespace dlcoh {

// Thrown for arguments outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// (x, x+d) is not an addable d-hook of the beta-set in question.
class InvalidHook : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// Parameters outside the regime m <= n < 2m.
class UnsupportedRegime : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

// A required hypothesis (e.g. the torsion-free gate) does not hold.
class PreconditionViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The linear-algebra model of the Brauer line broke one of its own invariants.
class ModelViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Two independent computations of the same quantity disagree.
class Inconsistency : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dlcoh
