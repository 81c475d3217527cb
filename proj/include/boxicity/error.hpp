// Copyright (c) Boxicity toolkit contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace boxicity {

enum class ErrorKind {
    InvalidInput,
    Parse,
    Precondition,
    Verification,
    BudgetExhausted,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

template <class... Args>
[[noreturn]] void raise(ErrorKind kind, const Args&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    throw Error(kind, os.str());
}

}  // namespace detail

#define BOXICITY_REQUIRE(cond, kind, ...)                  \
    do {                                                   \
        if (!(cond)) ::boxicity::detail::raise(kind, __VA_ARGS__); \
    } while (false)

}  // namespace boxicity
