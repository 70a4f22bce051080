#pragma once

#include "linfkit/linfty.hpp"
#include "linfkit/schouten.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lk {

class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, UnknownLabel, DegreeRule, Semantic };

    ParseError(Kind kind, int line, int column, const std::string& message);

    Kind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    Kind kind_;
    int line_, column_;
    std::string message_;
};

const char* kind_name(ParseError::Kind k);

// Text form:
//   [meta]      key = value
//   [space]     0: a b
//   [map 2]     a b -> 1/2 u -3 v
// '#' starts a comment. Entries of one map may come in any input order.
struct StructureFile {
    std::map<std::string, std::string> meta;
    LInfty structure;
};

StructureFile parse_structure_file(std::string_view text);
// Canonical file: meta keys sorted, degrees decreasing, entries on sorted tuples.
std::string serialize_structure(const StructureFile& file);
std::string serialize_structure(const LInfty& L, const std::map<std::string, std::string>& meta = {});

//   dim 3
//   pi 1 2 : x3 - 1/2*x1^2
//   H 1 2 3 : 1
// Indices and coordinates x1..xN are 1-based; repeated lines add up.
struct BivectorFile {
    PolyMultivector pi;
    ConstantThreeForm H;
};

BivectorFile parse_bivector_file(std::string_view text);
std::string serialize_bivector(const BivectorFile& file);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace lk
