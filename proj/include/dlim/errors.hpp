#pragma once
#include <stdexcept>
#include <string>

namespace dlim {

// Bad user input: schema problems, malformed posets/systems/families.
// The CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SchemaError : ValidationError {
    std::string path;
    SchemaError(std::string where, const std::string& msg)
        : ValidationError(where.empty() ? msg : where + ": " + msg), path(std::move(where)) {}
};

// A configured resource cap was exceeded (exit code 2).  Never a silent
// truncation: either the computation runs in full, or it refuses.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal hard assertion tripped (exit code 3).  These guard identities
// that hold by construction; a throw here means a bug, not bad input.
struct VerificationError : std::logic_error {
    explicit VerificationError(const std::string& msg) : std::logic_error(msg) {}
};

inline void verify(bool cond, const std::string& msg) {
    if (!cond) throw VerificationError(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ValidationError(msg);
}

}  // namespace dlim
