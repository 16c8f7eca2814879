#pragma once

#include <stdexcept>
#include <string>

namespace dslice {

// Malformed or inconsistent input (CLI exit code 1).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Well-formed input refused because a mathematical precondition fails,
// e.g. uncertified omega or a non-unimodular linking matrix (CLI exit code 2).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dslice
