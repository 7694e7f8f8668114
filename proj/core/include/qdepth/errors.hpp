#pragma once

#include <stdexcept>
#include <string>

namespace qdepth {

// Malformed ideal text. offset() is the 0-based byte position of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), mOffset(offset) {}

    std::size_t offset() const { return mOffset; }

private:
    std::size_t mOffset;
};

// Input outside an operation's domain: empty poset, I not contained in J,
// non-squarefree input to a squarefree-only routine, and so on.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input exceeds a configured resource cap (enumeration width, search size).
// Kept separate from DomainError so the CLI can map it to its own exit code.
class CapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qdepth
