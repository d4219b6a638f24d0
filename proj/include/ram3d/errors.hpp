// Copyright (c) 2026 ram3d authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ram3d {

// Error categories map 1:1 onto CLI exit codes (config=1, data=2, numeric=3, io=4).
enum class ErrorCategory { Config = 1, Data = 2, Numeric = 3, Io = 4 };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}
    ErrorCategory category() const { return category_; }

private:
    ErrorCategory category_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(ErrorCategory::Config, w) {}
};
struct ConfigMismatch : Error {
    explicit ConfigMismatch(const std::string& w) : Error(ErrorCategory::Config, w) {}
};
struct CountMismatch : Error {
    explicit CountMismatch(const std::string& w) : Error(ErrorCategory::Data, w) {}
};
struct ShapeError : Error {
    explicit ShapeError(const std::string& w) : Error(ErrorCategory::Data, w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(ErrorCategory::Data, w) {}
};
struct EmptyMask : Error {
    explicit EmptyMask(const std::string& w) : Error(ErrorCategory::Data, w) {}
};
struct VersionError : Error {
    explicit VersionError(const std::string& w) : Error(ErrorCategory::Data, w) {}
};
struct GuidanceError : Error {
    explicit GuidanceError(const std::string& w) : Error(ErrorCategory::Data, w) {}
};
struct FeatureError : Error {
    explicit FeatureError(const std::string& w) : Error(ErrorCategory::Data, w) {}
};
struct NumericalError : Error {
    explicit NumericalError(const std::string& w) : Error(ErrorCategory::Numeric, w) {}
};
struct DegenerateTimestep : Error {
    explicit DegenerateTimestep(const std::string& w) : Error(ErrorCategory::Numeric, w) {}
};
struct IoError : Error {
    explicit IoError(const std::string& w) : Error(ErrorCategory::Io, w) {}
};

} // namespace ram3d
