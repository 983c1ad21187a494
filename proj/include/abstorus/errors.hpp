#pragma once

#include <stdexcept>
#include <string>

namespace abstorus {

// Exception taxonomy shared by the library and the CLI exit-code contract.

struct RankMismatchError : std::invalid_argument {
    explicit RankMismatchError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct LevelError : std::invalid_argument {
    explicit LevelError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct IrrationalDirectionError : std::invalid_argument {
    explicit IrrationalDirectionError(const std::string& witness)
        : std::invalid_argument("direction not defined over Q: " + witness) {}
};

struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonInvertibleError : std::invalid_argument {
    explicit NonInvertibleError(const std::string& msg) : std::invalid_argument(msg) {}
};

struct NotClosedError : std::runtime_error {
    explicit NotClosedError(const std::string& witness)
        : std::runtime_error("set is not closed; witness cell: " + witness) {}
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), line(0), column(0) {}
    int line;
    int column;
};

}  // namespace abstorus
