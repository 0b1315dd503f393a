#pragma once

#include <string>

#include "qcat/quiver.hpp"
#include "qcat/weyl.hpp"

namespace qcat {

/// Quiver JSON schema: {"n": int, "arrows": [[i,j],...], "name": string?}
/// (1-based vertices on the wire).  This schema is normative for the CLI.
Quiver quiver_from_json(const std::string& text);
std::string quiver_to_json(const Quiver& q);

/// Built-in quivers: A1..A8, D4..D6, E6..E8, "triangle", "kronecker".
Quiver named_quiver(const std::string& name);

/// Word text: whitespace-separated 1-based indices ("1 2 3 2 1") or the
/// compact form "s1s2s3s2s1".  The empty string is the identity.
Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);

}  // namespace qcat
