#include "qcat/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace qcat {

using nlohmann::json;

Quiver quiver_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad quiver JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("arrows"))
    throw ParseError("quiver JSON needs fields \"n\" and \"arrows\"");
  int n = j.at("n").get<int>();
  std::vector<Arrow> arrows;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2)
      throw ParseError("each arrow must be a pair [i, j]");
    arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
  }
  std::string name = j.value("name", std::string{});
  return validate_quiver(n, arrows, name);
}

std::string quiver_to_json(const Quiver& q) {
  json j;
  j["n"] = q.n;
  j["arrows"] = json::array();
  for (const auto& [s, t] : q.arrows) j["arrows"].push_back({s, t});
  if (!q.name.empty()) j["name"] = q.name;
  return j.dump();
}

Quiver named_quiver(const std::string& name) {
  auto linear = [&](int n) {
    std::vector<Arrow> arrows;
    for (int i = 1; i < n; ++i) arrows.emplace_back(i, i + 1);
    return validate_quiver(n, arrows, name);
  };
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'a')) {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 8) return linear(n);
  }
  if (name.size() >= 2 && (name[0] == 'D' || name[0] == 'd')) {
    int n = std::stoi(name.substr(1));
    if (n >= 4 && n <= 6) {
      std::vector<Arrow> arrows;
      for (int i = 1; i < n - 1; ++i) arrows.emplace_back(i, i + 1);
      arrows.emplace_back(n - 2, n);
      return validate_quiver(n, arrows, name);
    }
  }
  if (name.size() >= 2 && (name[0] == 'E' || name[0] == 'e')) {
    int n = std::stoi(name.substr(1));
    if (n >= 6 && n <= 8) {
      std::vector<Arrow> arrows;
      for (int i = 1; i < n - 1; ++i) arrows.emplace_back(i, i + 1);
      arrows.emplace_back(3, n);
      return validate_quiver(n, arrows, name);
    }
  }
  if (name == "triangle")
    return validate_quiver(3, {{1, 2}, {2, 3}, {1, 3}}, name);
  if (name == "kronecker")
    return validate_quiver(2, {{1, 2}, {1, 2}}, name);
  throw ParseError("unknown quiver name: " + name);
}

Word parse_word(const std::string& text) {
  Word out;
  std::string cleaned;
  for (char c : text) {
    if (c == 's' || c == 'S' || c == ',') {
      cleaned.push_back(' ');
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               std::isspace(static_cast<unsigned char>(c))) {
      cleaned.push_back(c);
    } else {
      throw ParseError("unexpected character in word: " + std::string(1, c));
    }
  }
  std::istringstream is(cleaned);
  int v;
  while (is >> v) {
    if (v < 1) throw ParseError("word letters are 1-based");
    out.push_back(v);
  }
  return out;
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
  return os.str();
}

}  // namespace qcat
