#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromavar/gcomplex.hpp"
#include "chromavar/group.hpp"
#include "chromavar/presheaf.hpp"

namespace chromavar {

using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error(path + ": " + e.what());
  }
  return j;
}

// Group spec: { "name", "degree", "generators": [[image of 1..degree],...] }
// with 1-based images, or { "name", "table": [[...]], "labels": [...] }.
inline FiniteGroup group_from_json(const json& j, const Caps& caps = {}) {
  std::string name = j.value("name", "");
  if (j.contains("table")) {
    std::vector<std::vector<int>> table;
    for (const auto& row : j.at("table")) table.push_back(row.get<std::vector<int>>());
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return group_from_table(std::move(table), std::move(labels), name, caps);
  }
  if (!j.contains("degree") || !j.contains("generators"))
    throw input_error("group spec needs degree+generators or table");
  int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& row : j.at("generators")) {
    Perm g;
    for (const auto& v : row) {
      int x = v.get<int>();
      if (x < 1 || x > degree)
        throw input_error("generator image out of range (images are 1-based)");
      g.push_back(x - 1);
    }
    gens.push_back(std::move(g));
  }
  return group_from_perm_generators(degree, std::move(gens), name, caps);
}

inline FiniteGroup load_group(const std::string& path, const Caps& caps = {}) {
  FiniteGroup G = group_from_json(load_json_file(path), caps);
  if (G.name.empty()) {
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    G.name = dot == std::string::npos ? base : base.substr(0, dot);
  }
  return G;
}

// Presheaf file: { "p", "d", "levels": [[label,...],...],
// "restrictions": { "<k>x<j>:<row-major entries>": [image,...] } }.
inline std::string restriction_key(int k, int j, const FpMat& m) {
  return std::to_string(k) + "x" + std::to_string(j) + ":" + mat_entries_string(m);
}

inline FinitePresheaf presheaf_from_json(const json& j) {
  FinitePresheaf F;
  F.p = j.at("p").get<int>();
  F.d = j.at("d").get<int>();
  if (F.p > 9) throw input_error("presheaf prime must be at most 9 for the key format");
  ensure_prime(F.p);
  if (F.d < 0) throw input_error("negative truncation");
  for (const auto& lv : j.at("levels"))
    F.labels.push_back(lv.get<std::vector<std::string>>());
  if (static_cast<int>(F.labels.size()) != F.d + 1)
    throw input_error("levels array must have d+1 entries");
  for (const auto& lv : F.labels) F.level_size.push_back(static_cast<int>(lv.size()));
  const auto& rests = j.at("restrictions");
  F.rest.assign(F.d + 1, {});
  for (int k = 0; k <= F.d; ++k) {
    F.rest[k].assign(F.d + 1, {});
    for (int jj = 0; jj <= F.d; ++jj) {
      long long n = hom_count(F.p, k, jj);
      F.rest[k][jj].assign(static_cast<size_t>(n), {});
      for (long long mi = 0; mi < n; ++mi) {
        std::string key = restriction_key(k, jj, mat_of_index(F.p, k, jj, mi));
        if (!rests.contains(key))
          throw input_error("missing restriction " + key);
        auto row = rests.at(key).get<std::vector<int>>();
        if (static_cast<int>(row.size()) != F.level_size[k])
          throw input_error("restriction " + key + " has wrong length");
        for (int v : row)
          if (v < 0 || v >= F.level_size[jj])
            throw input_error("restriction " + key + " image out of range");
        F.rest[k][jj][static_cast<size_t>(mi)] = std::move(row);
      }
    }
  }
  return F;
}

inline json presheaf_to_json(const FinitePresheaf& F) {
  json j;
  j["p"] = F.p;
  j["d"] = F.d;
  json levels = json::array();
  for (int k = 0; k <= F.d; ++k) {
    json row = json::array();
    for (int x = 0; x < F.level_size[k]; ++x) row.push_back(F.label(k, x));
    levels.push_back(row);
  }
  j["levels"] = levels;
  json rests = json::object();
  for (int k = 0; k <= F.d; ++k)
    for (int jj = 0; jj <= F.d; ++jj) {
      long long n = hom_count(F.p, k, jj);
      for (long long mi = 0; mi < n; ++mi)
        rests[restriction_key(k, jj, mat_of_index(F.p, k, jj, mi))] =
            F.rmap(k, jj, mi);
    }
  j["restrictions"] = rests;
  return j;
}

inline FinitePresheaf load_presheaf(const std::string& path) {
  return presheaf_from_json(load_json_file(path));
}

// Complex file: { "name", "group": optional name, "vertices": [...],
// "edges": [[i,j],...], "action": [[...] per group generator] } with
// 0-based vertex indices.
inline GComplex complex_from_json(const FiniteGroup& G, const json& j) {
  std::vector<std::string> vlabels =
      j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (e.size() != 2) throw input_error("edge must have two endpoints");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  std::vector<std::vector<int>> actions;
  for (const auto& row : j.at("action"))
    actions.push_back(row.get<std::vector<int>>());
  return build_gcomplex(G, std::move(vlabels), std::move(edges), actions,
                        j.value("name", ""));
}

inline GComplex load_complex(const FiniteGroup& G, const std::string& path) {
  return complex_from_json(G, load_json_file(path));
}

}  // namespace chromavar
