#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperalg/groups.hpp"
#include "hyperalg/hypergroup.hpp"

namespace hyperalg {

// Hypergroup file, line oriented, '#' starts a comment, blank lines ignored:
//
//   hypergroup v1
//   name <token>
//   order <n>
//   cell <i> <j> : <k1> <k2> ...     (exactly n^2 of these, members ascending)
//
// Group file, same conventions:
//
//   group v1
//   name <token>
//   order <n>
//   row <i> : <g_i g_0> <g_i g_1> ... <g_i g_{n-1}>   (exactly n of these)

enum class FormatErrorKind {
    syntax_error,
    duplicate_cell,
    missing_cell,
    index_out_of_range,
    invalid_hypergroup,
    not_a_group,
};

const char* to_string(FormatErrorKind k);

class FormatError : public std::runtime_error {
  public:
    FormatError(FormatErrorKind kind, std::size_t line, const std::string& detail);
    [[nodiscard]] FormatErrorKind kind() const { return kind_; }
    /// 1-based; 0 when the error is not tied to one line.
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    FormatErrorKind kind_;
    std::size_t line_;
};

struct NamedHypergroup {
    std::string name;
    Hypergroup hypergroup;
};

NamedHypergroup parse_hypergroup(std::string_view text);
std::string serialize_hypergroup(const Hypergroup& h, std::string_view name);

CayleyTable parse_group(std::string_view text);
std::string serialize_group(const CayleyTable& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace hyperalg
