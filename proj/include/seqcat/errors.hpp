#pragma once

#include <stdexcept>
#include <string>

namespace seqcat {

// Bad input or a violated precondition.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A materialization would exceed the configured cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (FASTA, JSON, literals).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_cap = 10'000'000;

}  // namespace seqcat
