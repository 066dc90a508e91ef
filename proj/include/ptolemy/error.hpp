#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ptolemy {

// Malformed arguments: bad vertex indices, mismatched polygon sizes,
// unparsable text, structurally invalid decomposition trees.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested polygon size is outside what an operation supports.
class CapacityError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Root finding without a sign change on the bracket.
class BracketError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when a diagram fails to be a Ptolemy diagram. The offending face
// (vertex cycle of a region holding a proper nonempty subset of its
// internal diagonals) is carried along when the decomposition found it.
class NotPtolemy : public std::runtime_error {
public:
    explicit NotPtolemy(std::vector<int> face = {})
        : std::runtime_error(describe(face)), face_(std::move(face)) {}

    const std::vector<int>& face() const noexcept { return face_; }

private:
    static std::string describe(const std::vector<int>& face) {
        std::string s = "not a Ptolemy diagram";
        if (!face.empty()) {
            s += " (offending face [";
            for (std::size_t i = 0; i < face.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(face[i]);
            }
            s += "])";
        }
        return s;
    }

    std::vector<int> face_;
};

}  // namespace ptolemy
