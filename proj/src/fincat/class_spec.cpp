#include "fincat/class_spec.hpp"

#include <algorithm>
#include <sstream>

#include "fincat/context.hpp"
#include "homcat/error.hpp"

namespace fincat {

using homcat::ParseError;

namespace {

std::vector<int> parse_index_set(const std::string& text) {
  std::vector<int> out;
  std::string body = text.substr(4);  // past "set:"
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad morphism index `" + item + "` in explicit class");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

MClassSpec MClassSpec::parse(const std::string& text) {
  MClassSpec spec;
  if (text == "all-proper-epis") spec.kind = AllProperEpis;
  else if (text == "maximal-epis") spec.kind = MaximalEpis;
  else if (text == "none") spec.kind = None;
  else if (text.rfind("set:", 0) == 0) {
    spec.kind = Explicit;
    spec.explicit_set = parse_index_set(text);
  } else {
    throw ParseError("unknown M-class `" + text + "` (want all-proper-epis, maximal-epis, none or set:i,j,...)");
  }
  return spec;
}

std::string MClassSpec::name() const {
  switch (kind) {
    case AllProperEpis: return "all-proper-epis";
    case MaximalEpis: return "maximal-epis";
    case None: return "none";
    case Explicit: break;
  }
  std::string s = "set:";
  for (size_t i = 0; i < explicit_set.size(); ++i) s += (i ? "," : "") + std::to_string(explicit_set[i]);
  return s;
}

std::vector<int> MClassSpec::resolve(const Context& ctx) const {
  const FiniteCategory& C = ctx.cat();
  std::vector<int> out;
  switch (kind) {
    case AllProperEpis:
      for (int f = 0; f < C.morphism_count(); ++f)
        if (ctx.epi[f] && !ctx.iso[f]) out.push_back(f);
      break;
    case MaximalEpis:
      for (int x = 0; x < C.object_count(); ++x)
        for (int c : maximal_classes(ctx.sup[x]))
          for (int f : ctx.sup[x].classes[c].members) out.push_back(f);
      std::sort(out.begin(), out.end());
      break;
    case None:
      break;
    case Explicit:
      for (int f : explicit_set) {
        if (f < 0 || f >= C.morphism_count())
          throw ParseError("M-class index " + std::to_string(f) + " out of range");
        if (!ctx.epi[f])
          throw ParseError("M-class morphism " + C.morphisms[f].label + " is not an epimorphism");
        out.push_back(f);
      }
      break;
  }
  return out;
}

IClassSpec IClassSpec::parse(const std::string& text) {
  IClassSpec spec;
  if (text == "all-monos") spec.kind = AllMonos;
  else if (text == "all-morphisms") spec.kind = AllMorphisms;
  else if (text.rfind("set:", 0) == 0) {
    spec.kind = Explicit;
    spec.explicit_set = parse_index_set(text);
  } else {
    throw ParseError("unknown I-class `" + text + "` (want all-monos, all-morphisms or set:i,j,...)");
  }
  return spec;
}

std::string IClassSpec::name() const {
  switch (kind) {
    case AllMonos: return "all-monos";
    case AllMorphisms: return "all-morphisms";
    case Explicit: break;
  }
  std::string s = "set:";
  for (size_t i = 0; i < explicit_set.size(); ++i) s += (i ? "," : "") + std::to_string(explicit_set[i]);
  return s;
}

std::vector<char> IClassSpec::membership(const Context& ctx) const {
  const FiniteCategory& C = ctx.cat();
  std::vector<char> member(C.morphism_count(), 0);
  switch (kind) {
    case AllMonos:
      for (int f = 0; f < C.morphism_count(); ++f) member[f] = ctx.mono[f];
      break;
    case AllMorphisms:
      std::fill(member.begin(), member.end(), 1);
      break;
    case Explicit:
      for (int f : explicit_set) {
        if (f < 0 || f >= C.morphism_count())
          throw ParseError("I-class index " + std::to_string(f) + " out of range");
        member[f] = 1;
      }
      break;
  }
  for (int id : C.identity)
    if (id >= 0) member[id] = 1;  // every I-class contains the identities
  return member;
}

}  // namespace fincat
