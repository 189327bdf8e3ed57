#include "fincat/text_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "homcat/error.hpp"

namespace fincat {

using homcat::ParseError;

namespace {

struct Line {
  int no;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream is(text);
  std::string raw;
  int no = 0;
  while (std::getline(is, raw)) {
    ++no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{no, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace

FiniteCategory parse_category(const std::string& text) {
  auto lines = tokenize(text);
  FiniteCategory C;
  std::unordered_map<std::string, int> obj_ids, mor_ids;

  for (const auto& line : lines) {
    if (line.tokens[0] != "obj") continue;
    if (line.tokens.size() != 2) throw ParseError("want `obj <name>`", line.no);
    if (obj_ids.count(line.tokens[1])) throw ParseError("duplicate object `" + line.tokens[1] + "`", line.no);
    obj_ids[line.tokens[1]] = C.add_object(line.tokens[1]);
  }
  for (const auto& line : lines) {
    if (line.tokens[0] != "mor") continue;
    if (line.tokens.size() != 6 || line.tokens[2] != ":" || line.tokens[4] != "->")
      throw ParseError("want `mor <name> : <dom> -> <cod>`", line.no);
    const auto& name = line.tokens[1];
    if (mor_ids.count(name)) throw ParseError("duplicate morphism `" + name + "`", line.no);
    auto dom = obj_ids.find(line.tokens[3]);
    auto cod = obj_ids.find(line.tokens[5]);
    if (dom == obj_ids.end()) throw ParseError("unknown object `" + line.tokens[3] + "`", line.no);
    if (cod == obj_ids.end()) throw ParseError("unknown object `" + line.tokens[5] + "`", line.no);
    mor_ids[name] = C.add_morphism(name, dom->second, cod->second);
  }
  C.finalize();

  auto need_mor = [&](const std::string& name, int no) {
    auto it = mor_ids.find(name);
    if (it == mor_ids.end()) throw ParseError("unknown morphism `" + name + "`", no);
    return it->second;
  };
  for (const auto& line : lines) {
    if (line.tokens[0] != "id") continue;
    if (line.tokens.size() != 4 || line.tokens[2] != "=") throw ParseError("want `id <obj> = <mor>`", line.no);
    auto obj = obj_ids.find(line.tokens[1]);
    if (obj == obj_ids.end()) throw ParseError("unknown object `" + line.tokens[1] + "`", line.no);
    if (C.identity[obj->second] != -1) throw ParseError("duplicate identity for `" + line.tokens[1] + "`", line.no);
    C.set_identity(obj->second, need_mor(line.tokens[3], line.no));
  }
  for (int x = 0; x < C.object_count(); ++x)
    if (C.identity[x] == -1) throw ParseError("no identity declared for object `" + C.objects[x] + "`");

  for (const auto& line : lines) {
    if (line.tokens[0] == "obj" || line.tokens[0] == "mor" || line.tokens[0] == "id") continue;
    if (line.tokens[0] != "cmp") throw ParseError("unknown directive `" + line.tokens[0] + "`", line.no);
    if (line.tokens.size() != 6 || line.tokens[2] != "." || line.tokens[4] != "=")
      throw ParseError("want `cmp <g> . <f> = <h>`", line.no);
    int g = need_mor(line.tokens[1], line.no);
    int f = need_mor(line.tokens[3], line.no);
    int h = need_mor(line.tokens[5], line.no);
    if (!C.composable(g, f))
      throw ParseError("pair is not composable: cod(" + line.tokens[3] + ") != dom(" + line.tokens[1] + ")", line.no);
    if (C.compose(g, f) != -1) throw ParseError("duplicate composition entry", line.no);
    C.set_compose(g, f, h);
  }
  return C;
}

std::string format_category(const FiniteCategory& C) {
  std::ostringstream os;
  for (const auto& name : C.objects) os << "obj " << name << '\n';
  for (const auto& m : C.morphisms)
    os << "mor " << m.label << " : " << C.objects[m.dom] << " -> " << C.objects[m.cod] << '\n';
  for (int x = 0; x < C.object_count(); ++x)
    os << "id " << C.objects[x] << " = " << C.morphisms[C.identity[x]].label << '\n';
  for (int g = 0; g < C.morphism_count(); ++g)
    for (int f = 0; f < C.morphism_count(); ++f) {
      if (!C.composable(g, f)) continue;
      int h = C.compose(g, f);
      if (h >= 0)
        os << "cmp " << C.morphisms[g].label << " . " << C.morphisms[f].label << " = " << C.morphisms[h].label
           << '\n';
    }
  return os.str();
}

FiniteCategory load_category(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open category file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_category(ss.str());
}

}  // namespace fincat
