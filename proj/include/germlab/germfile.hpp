#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "germlab/detideal.hpp"

namespace germlab {

class GermFileError : public std::runtime_error {
public:
    GermFileError(const std::string& msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

// Germ file:
//   vars: x, y, z
//   kind: general            (optional, general|symmetric|skew)
//   matrix:
//   [ x, 0, z ]
//   [ 0, y, z ]
// '#' starts a comment.
MatrixGerm parse_germ_file(const std::string& text);
std::string format_germ_file(const MatrixGerm& a);

// Splits "[ e1, e2, ... ]" into its entries; column offsets (0-based) of each
// entry are returned through starts. Throws std::invalid_argument.
std::vector<std::string> split_matrix_row(const std::string& line, std::vector<std::size_t>* starts = nullptr);

std::vector<std::string> split_names(const std::string& list);

}  // namespace germlab
