#pragma once

#include <map>
#include <optional>
#include <vector>

#include "chromavar/presheaf.hpp"

namespace chromavar {

struct IsoResult {
  bool isomorphic = false;
  std::optional<PresheafMap> witness;
};

namespace detail {

// Iterated color refinement over both outgoing restriction targets and
// incoming preimage multisets. Colors are comparable across the two
// presheaves because the signature dictionary is shared.
inline std::vector<std::vector<std::vector<int>>> refine_colors(
    const std::vector<const FinitePresheaf*>& ps) {
  int d = ps[0]->d, p = ps[0]->p;
  std::vector<std::vector<std::vector<int>>> colors(ps.size());
  for (size_t t = 0; t < ps.size(); ++t) {
    colors[t].resize(d + 1);
    for (int k = 0; k <= d; ++k) colors[t][k].assign(ps[t]->level_size[k], k);
  }
  for (int round = 0; round < 2 * (d + 2); ++round) {
    std::map<std::vector<int>, int> dict;
    std::vector<std::vector<std::vector<int>>> next(ps.size());
    bool changed = false;
    for (size_t t = 0; t < ps.size(); ++t) {
      const FinitePresheaf& F = *ps[t];
      next[t].resize(d + 1);
      for (int k = 0; k <= d; ++k) {
        next[t][k].resize(F.level_size[k]);
        for (int x = 0; x < F.level_size[k]; ++x) {
          std::vector<int> sig{colors[t][k][x]};
          for (int j = 0; j <= d; ++j) {
            long long n = hom_count(p, k, j);
            for (long long mi = 0; mi < n; ++mi)
              sig.push_back(colors[t][j][F.apply(k, j, mi, x)]);
          }
          for (int m = 0; m <= d; ++m) {
            long long n = hom_count(p, m, k);
            for (long long mi = 0; mi < n; ++mi) {
              std::vector<int> pre;
              for (int y = 0; y < F.level_size[m]; ++y)
                if (F.apply(m, k, mi, y) == x) pre.push_back(colors[t][m][y]);
              std::sort(pre.begin(), pre.end());
              sig.push_back(-1);
              sig.insert(sig.end(), pre.begin(), pre.end());
            }
          }
          auto [it, fresh] = dict.emplace(std::move(sig), static_cast<int>(dict.size()));
          next[t][k][x] = it->second;
          if (next[t][k][x] != colors[t][k][x]) changed = true;
        }
      }
    }
    colors = std::move(next);
    if (!changed) break;
  }
  return colors;
}

struct IsoSearch {
  const FinitePresheaf& F;
  const FinitePresheaf& G;
  const std::vector<std::vector<int>>& colF;
  const std::vector<std::vector<int>>& colG;
  std::vector<std::vector<int>> sigma;  // F elt -> G elt or -1
  std::vector<std::vector<char>> used;  // per level, G side
  std::vector<std::pair<int, int>> order;

  bool propagate(std::vector<std::pair<int, int>>& trail, int k, int x) {
    std::vector<std::pair<int, int>> queue{{k, x}};
    while (!queue.empty()) {
      auto [kk, xx] = queue.back();
      queue.pop_back();
      int yy = sigma[kk][xx];
      for (int j = 0; j <= F.d; ++j) {
        long long n = hom_count(F.p, kk, j);
        for (long long mi = 0; mi < n; ++mi) {
          int fx = F.apply(kk, j, mi, xx);
          int gy = G.apply(kk, j, mi, yy);
          if (sigma[j][fx] >= 0) {
            if (sigma[j][fx] != gy) return false;
          } else {
            if (used[j][gy] || colF[j][fx] != colG[j][gy]) return false;
            sigma[j][fx] = gy;
            used[j][gy] = 1;
            trail.push_back({j, fx});
            queue.push_back({j, fx});
          }
        }
      }
    }
    return true;
  }

  bool solve(size_t pos) {
    while (pos < order.size() && sigma[order[pos].first][order[pos].second] >= 0)
      ++pos;
    if (pos == order.size()) return true;
    auto [k, x] = order[pos];
    for (int y = 0; y < G.level_size[k]; ++y) {
      if (used[k][y] || colF[k][x] != colG[k][y]) continue;
      std::vector<std::pair<int, int>> trail{{k, x}};
      sigma[k][x] = y;
      used[k][y] = 1;
      if (propagate(trail, k, x) && solve(pos + 1)) return true;
      for (auto [tk, tx] : trail) {
        used[tk][sigma[tk][tx]] = 0;
        sigma[tk][tx] = -1;
      }
    }
    return false;
  }
};

}  // namespace detail

// Exact natural-isomorphism search; backtracking over elements from the top
// level down, pruned by restriction-profile colors. Throws cap_exceeded when
// a level is larger than caps.max_level.
inline IsoResult presheaf_iso_check(const FinitePresheaf& F, const FinitePresheaf& G,
                                    const Caps& caps = {}) {
  if (F.p != G.p || F.d != G.d)
    throw input_error("iso check: presheaves disagree on p or d");
  for (int k = 0; k <= F.d; ++k)
    if (F.level_size[k] > caps.max_level || G.level_size[k] > caps.max_level)
      throw cap_exceeded("iso check: level size exceeds cap");
  for (int k = 0; k <= F.d; ++k)
    if (F.level_size[k] != G.level_size[k]) return {};

  auto colors = detail::refine_colors({&F, &G});
  for (int k = 0; k <= F.d; ++k) {
    auto a = colors[0][k], b = colors[1][k];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return {};
  }

  detail::IsoSearch search{F, G, colors[0], colors[1], {}, {}, {}};
  search.sigma.resize(F.d + 1);
  search.used.resize(F.d + 1);
  for (int k = 0; k <= F.d; ++k) {
    search.sigma[k].assign(F.level_size[k], -1);
    search.used[k].assign(G.level_size[k], 0);
  }
  for (int k = F.d; k >= 0; --k)
    for (int x = 0; x < F.level_size[k]; ++x) search.order.push_back({k, x});
  if (!search.solve(0)) return {};

  PresheafMap phi{F.p, F.d, search.sigma};
  if (!check_naturality(F, G, phi) || !levelwise_injective(G, phi) ||
      !levelwise_surjective(G, phi))
    throw internal_error("iso search produced a non-isomorphism");
  return {true, phi};
}

}  // namespace chromavar
