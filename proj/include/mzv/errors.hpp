#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A query violates a stated hypothesis (dimension mismatch, Re-part
/// constraint, zero theta tail sum, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// A request exceeds the configured desk-scale limits.
class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

/// Evaluation hit the polar locus.  `index` is the 1-based hyperplane
/// index when one can be named, 0 otherwise.
class PoleError : public Error {
public:
    PoleError(const std::string& msg, int index) : Error(msg), index_(index) {}
    int hyperplane_index() const { return index_; }

private:
    int index_ = 0;
};

/// A numeric routine cannot certify the requested tolerance within its
/// iteration caps.
class ToleranceError : public Error {
public:
    explicit ToleranceError(const std::string& msg) : Error(msg) {}
};

} // namespace mzv
