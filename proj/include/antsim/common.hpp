#pragma once

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace antsim {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Config-file error carrying the 1-based line it was detected on.
class ParseError : public Error {
  public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Time-integration failure (negative density or nonfinite value),
/// carrying the offending field and cell.
class StepError : public Error {
  public:
    StepError(std::string field, int i, int j, double value, const std::string& what)
        : Error(what), field_(std::move(field)), i_(i), j_(j), value_(value) {}
    const std::string& field() const { return field_; }
    int cell_i() const { return i_; }
    int cell_j() const { return j_; }
    double value() const { return value_; }

  private:
    std::string field_;
    int i_, j_;
    double value_;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Vec2&) const = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double norm(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }

/// Shortest decimal representation that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Strict full-string double parse; accepts "inf". Returns false on junk.
inline bool parse_double(std::string_view s, double& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last;
}

} // namespace antsim
