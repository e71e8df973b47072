#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace graphiq {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// Lexicographic order on (x, y); used as the deterministic tie-break order
// for geometric degeneracies.
inline bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

enum class Label { happy, sad };

enum class Strategy { complete, meshed };
enum class Backend { classical, quantum_exact, quantum_shots };

// Ordered landmark points plus the expression tag. Point order carries
// landmark identity through extraction and sampling.
struct PointCloud {
    std::vector<Point> points;
    Label label = Label::happy;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated precondition or type invariant.
class ContractError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Geometric input the triangulation cannot handle (all collinear, duplicates).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

class EncodingError : public Error {
public:
    using Error::Error;
};

class PostSelectionError : public Error {
public:
    using Error::Error;
};

std::string to_string(Label label);
std::string to_string(Strategy strategy);
std::string to_string(Backend backend);

Label label_from_string(const std::string& text);
Strategy strategy_from_string(const std::string& text);
Backend backend_from_string(const std::string& text);

}  // namespace graphiq
