#pragma once
#include <stdexcept>
#include <string>

namespace wsi {

// Bad configuration or precondition on user-facing inputs.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Water depth or object clearance became non-positive.
class PhysicalStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reference solution could not be trusted (e.g. inversion methods disagree).
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Time stepping stopped; carries the step index and where the snapshot went.
class SolverAbort : public std::runtime_error {
public:
    SolverAbort(const std::string& what, long step, std::string snapshot = {})
        : std::runtime_error(what), step_(step), snapshot_(std::move(snapshot)) {}
    long step() const { return step_; }
    const std::string& snapshot_path() const { return snapshot_; }
    void set_snapshot_path(std::string p) { snapshot_ = std::move(p); }

private:
    long step_;
    std::string snapshot_;
};

}  // namespace wsi
