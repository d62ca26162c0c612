#pragma once

#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>
#include <variant>

#include "qba/quadratic_set.hpp"
#include "qba/relations.hpp"

namespace qba {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ":" +
                             std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

using Presentation = std::variant<RelationSet, QuadraticSet>;

// Presentation grammar:
//   gens <name>+
//   rel <a>*<b> = [<rational> *] <c>*<d>
//   lmap <name> : <cycle-notation permutation | id>
//   # comment
// Relation files yield a RelationSet; lmap files a QuadraticSet built as
// r(x,y) = (L_x(y), L_y^{-1}(x)).
Presentation parse_presentation(const std::string& text);
Presentation load_presentation_file(const std::string& path);

// Inverse of the parser up to semantic equality. A QuadraticSet is emitted
// in lmap form, which requires r to be of left-action type; otherwise throws.
std::string emit_presentation(const Presentation& p);

// Byte-stable structured report: format header + key-sorted JSON.
std::string report_to_text(const nlohmann::json& body);

}  // namespace qba
