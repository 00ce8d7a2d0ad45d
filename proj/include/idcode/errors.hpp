#pragma once

#include <stdexcept>
#include <string>

namespace idcode {

// A solver or checker was asked for an instance beyond its documented cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The graph has twin vertices, so no identifying code exists.
struct TwinsPresent : std::runtime_error {
    int u, v;
    TwinsPresent(int u_, int v_)
        : std::runtime_error("twins: " + std::to_string(u_) + "," + std::to_string(v_)),
          u(u_), v(v_) {}
};

// The instance admits no solution (empty requirement, uncoverable element, ...).
struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error(what) {}
};

// A reduction input that the construction is not meant for (some set covers
// all of X); callers should solve such instances directly.
struct DegenerateInstance : std::runtime_error {
    explicit DegenerateInstance(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace idcode
