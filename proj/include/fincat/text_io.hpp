#pragma once

#include <string>

#include "fincat/category.hpp"

namespace fincat {

// Line-oriented category format, order-insensitive:
//   obj <name>
//   mor <name> : <dom> -> <cod>
//   id <obj> = <mor>
//   cmp <g> . <f> = <h>
// `#` starts a comment. Every name is a whitespace-free token. The parser
// leaves missing composition entries as holes for validate() to report;
// structural problems (unknown names, duplicates, non-composable cmp
// pairs) throw homcat::ParseError with a line number.
FiniteCategory parse_category(const std::string& text);
std::string format_category(const FiniteCategory& C);
FiniteCategory load_category(const std::string& path);

}  // namespace fincat
