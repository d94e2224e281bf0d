#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hct {

enum class ErrorKind {
    Contract,
    Singularity,
    Branch,
    Divergence,
    Domain,
    Accuracy,
    Input,
    NotFound,
    Unsupported,
    Conditioning,
    Usage
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Raised when a numerical procedure ran out of budget; keeps what it had.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& msg, std::vector<double> best, double err)
        : Error(ErrorKind::Accuracy, msg), best_(std::move(best)), err_(err) {}
    const std::vector<double>& best_estimate() const { return best_; }
    double err_estimate() const { return err_; }

private:
    std::vector<double> best_;
    double err_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace hct
