#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wronsk {

/// Instance text that does not match the grammar. Positions are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An operation would exceed an expansion budget or another resource cap.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wronsk
