#pragma once

// JSON and CSV forms of characters, modules, loop weights and presentations.

#include "demazure/characters.hpp"
#include "demazure/engine/construct.hpp"
#include "demazure/engine/presentation.hpp"
#include "demazure/loopweights.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace demazure::io {

using json = nlohmann::json;

inline json to_json(const Weight& w) { return w.coords(); }

inline Weight weight_from_json(const json& j) { return Weight(j.get<std::vector<int>>()); }

/// Parses "1,0,2" into a weight.
inline Weight parse_weight(const std::string& s) {
  std::vector<int> c;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad weight coordinate '" + tok + "'");
    c.push_back(v);
  }
  if (c.empty()) throw std::invalid_argument("empty weight");
  return Weight(c);
}

inline json to_json(const GradedCharacter& ch) {
  json out = json::array();
  for (const auto& [k, m] : ch.terms) out.push_back({{"weight", to_json(k.first)}, {"grade", k.second}, {"mult", m}});
  return out;
}

inline json to_json(const ClassicalCharacter& ch) {
  json out = json::array();
  for (const auto& [w, m] : ch.terms) out.push_back({{"weight", to_json(w)}, {"grade", 0}, {"mult", m}});
  return out;
}

inline GradedCharacter character_from_json(const json& j) {
  GradedCharacter ch;
  for (const auto& r : j) ch.add(weight_from_json(r.at("weight")), r.at("grade").get<int>(), r.at("mult").get<Multiplicity>());
  return ch;
}

inline json module_to_json(const engine::GradedModule& m) {
  json out = json::array();
  for (const auto& [k, d] : m.dims.terms) out.push_back({{"weight", to_json(k.first)}, {"grade", k.second}, {"dim", d}});
  return out;
}

inline GradedCharacter module_dims_from_json(const json& j) {
  GradedCharacter ch;
  for (const auto& r : j) ch.add(weight_from_json(r.at("weight")), r.at("grade").get<int>(), r.at("dim").get<Multiplicity>());
  return ch;
}

inline json to_json(const LoopWeight& p) {
  json out = json::array();
  for (const auto& f : p.factors()) out.push_back({f.node, f.exponent});
  return out;
}

inline LoopWeight loop_weight_from_json(int rank, const json& j) {
  std::vector<LoopFactor> f;
  for (const auto& x : j) f.push_back({x.at(0).get<int>(), x.at(1).get<int>()});
  return LoopWeight(rank, f);
}

inline json to_json(const engine::RelationFactor& f) {
  json label;
  switch (f.label) {
    case engine::Label::Lower: label = {"x-", f.i, f.j}; break;
    case engine::Label::Raise: label = {"x+", f.i, f.j}; break;
    case engine::Label::Cartan: label = {"h", f.i}; break;
  }
  return {label, f.t, f.power};
}

inline json to_json(const engine::Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relations) {
    json word = json::array();
    for (const auto& f : r.factors) word.push_back(to_json(f));
    rels.push_back(word);
  }
  return {{"name", p.name}, {"highest_weight", to_json(p.highest_weight)}, {"relations", rels}};
}

inline engine::Presentation presentation_from_json(const json& j) {
  engine::Presentation p{weight_from_json(j.at("highest_weight")), {}, j.value("name", std::string())};
  for (const auto& word : j.at("relations")) {
    engine::Relation r;
    for (const auto& f : word) {
      const auto& label = f.at(0);
      const std::string kind = label.at(0).get<std::string>();
      engine::RelationFactor rf{engine::Label::Lower, label.at(1).get<int>(), 0, f.at(1).get<int>(), f.at(2).get<int>()};
      if (kind == "h") {
        rf.label = engine::Label::Cartan;
      } else {
        rf.j = label.at(2).get<int>();
        if (kind == "x+")
          rf.label = engine::Label::Raise;
        else if (kind != "x-")
          throw std::invalid_argument("unknown relation label " + kind);
      }
      r.factors.push_back(rf);
    }
    p.relations.push_back(r);
  }
  return p;
}

inline std::string weight_cell(const Weight& w) {
  std::string s;
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1) s += ";";
    s += std::to_string(w.coord(i));
  }
  return s;
}

/// CSV with header; the value column is named by `value`.
inline std::string to_csv(const GradedCharacter& ch, const std::string& value) {
  std::string out = "weight,grade," + value + "\n";
  for (const auto& [k, m] : ch.terms)
    out += weight_cell(k.first) + "," + std::to_string(k.second) + "," + std::to_string(m) + "\n";
  return out;
}

}  // namespace demazure::io
