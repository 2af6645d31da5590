#include "pointhom/autgroup.hpp"

#include <algorithm>
#include <map>

namespace pointhom {

std::vector<int> equitable_coloring(const LabeledDistanceMatrix& ldm) {
  const int k = ldm.k;
  std::vector<int> color(k, 0);
  int num_colors = 1;
  while (true) {
    // Signature of v: current color plus the multiset of (label, color) over
    // all other points, canonicalized by counts.
    std::vector<std::vector<int>> sig(k);
    const int l = ldm.num_labels() + 1;
    for (int v = 0; v < k; ++v) {
      std::vector<int> counts(l * num_colors, 0);
      for (int u = 0; u < k; ++u)
        if (u != v) ++counts[ldm.labels[v][u] * num_colors + color[u]];
      sig[v].push_back(color[v]);
      sig[v].insert(sig[v].end(), counts.begin(), counts.end());
    }
    std::map<std::vector<int>, int> index;
    for (int v = 0; v < k; ++v) index.emplace(sig[v], 0);
    int next = 0;
    for (auto& [key, idx] : index) idx = next++;
    std::vector<int> new_color(k);
    for (int v = 0; v < k; ++v) new_color[v] = index[sig[v]];
    if (next == num_colors && new_color == color) return color;
    color = std::move(new_color);
    num_colors = next;
  }
}

namespace {

class AutSearch {
 public:
  explicit AutSearch(const LabeledDistanceMatrix& ldm)
      : ldm_(ldm), k_(ldm.k), color_(equitable_coloring(ldm)) {}

  std::vector<Perm> run() {
    std::vector<Perm> gens;
    for (int level = 0; level < k_; ++level) {
      // Extension class of the base point `level` with respect to the prefix
      // 0..level-1: same color and the same label vector to the prefix.
      std::vector<int> candidates;
      for (int w = level; w < k_; ++w) {
        if (color_[w] != color_[level]) continue;
        bool consistent = true;
        for (int i = 0; i < level && consistent; ++i)
          consistent = ldm_.labels[w][i] == ldm_.labels[level][i];
        if (consistent) candidates.push_back(w);
      }
      if (candidates.size() <= 1) continue;
      std::vector<char> in_orbit = orbit_of(level, gens, level);
      for (int w : candidates) {
        if (in_orbit[w]) continue;
        if (auto g = find_automorphism(level, w)) {
          gens.push_back(std::move(*g));
          in_orbit = orbit_of(level, gens, level);
        }
      }
    }
    return gens;
  }

 private:
  // Orbit of `point` under the generators found at this level or deeper,
  // i.e. those fixing 0..prefix-1 pointwise.
  std::vector<char> orbit_of(int point, const std::vector<Perm>& gens, int prefix) const {
    std::vector<const Perm*> usable;
    for (const auto& g : gens) {
      bool fixes = true;
      for (int i = 0; i < prefix && fixes; ++i) fixes = g(i) == i;
      if (fixes) usable.push_back(&g);
    }
    std::vector<char> seen(k_, 0);
    std::vector<int> queue{point};
    seen[point] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const Perm* g : usable) {
        const int q = (*g)(queue[head]);
        if (!seen[q]) { seen[q] = 1; queue.push_back(q); }
      }
    return seen;
  }

  // First automorphism fixing 0..level-1 pointwise and mapping level -> w,
  // or nullopt after exhausting the tree.
  std::optional<Perm> find_automorphism(int level, int w) {
    img_.assign(k_, -1);
    used_.assign(k_, 0);
    for (int i = 0; i < level; ++i) { img_[i] = i; used_[i] = 1; }
    if (!consistent(level, w)) return std::nullopt;
    img_[level] = w;
    used_[w] = 1;
    if (extend(level + 1)) return Perm(img_);
    return std::nullopt;
  }

  bool consistent(int v, int u) const {
    if (color_[u] != color_[v]) return false;
    for (int i = 0; i < v; ++i)
      if (ldm_.labels[v][i] != ldm_.labels[u][img_[i]]) return false;
    return true;
  }

  bool extend(int v) {
    if (v == k_) return true;
    for (int u = 0; u < k_; ++u) {
      if (used_[u] || !consistent(v, u)) continue;
      img_[v] = u;
      used_[u] = 1;
      if (extend(v + 1)) return true;
      img_[v] = -1;
      used_[u] = 0;
    }
    return false;
  }

  const LabeledDistanceMatrix& ldm_;
  int k_;
  std::vector<int> color_;
  std::vector<int> img_;
  std::vector<char> used_;
};

}  // namespace

std::vector<Perm> automorphisms(const LabeledDistanceMatrix& ldm) {
  if (ldm.k == 1) return {};
  return AutSearch(ldm).run();
}

PermGroup automorphism_group(const LabeledDistanceMatrix& ldm) {
  return PermGroup::from_generators(automorphisms(ldm), ldm.k);
}

bool is_transitive(const PermGroup& g) {
  return g.is_transitive();
}

}  // namespace pointhom
