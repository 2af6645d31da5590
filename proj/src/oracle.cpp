#include "pointhom/oracle.hpp"

#include <algorithm>
#include <map>

#include "pointhom/errors.hpp"

namespace pointhom {

namespace {

void search(const LabeledDistanceMatrix& ldm, const std::vector<std::vector<long long>>& profile,
            std::vector<int>& img, std::vector<char>& used, int v, std::vector<Perm>& out) {
  const int k = ldm.k;
  if (v == k) {
    out.emplace_back(img);
    return;
  }
  for (int u = 0; u < k; ++u) {
    if (used[u] || profile[u] != profile[v]) continue;
    bool ok = true;
    for (int i = 0; i < v && ok; ++i) ok = ldm.labels[v][i] == ldm.labels[u][img[i]];
    if (!ok) continue;
    img[v] = u;
    used[u] = 1;
    search(ldm, profile, img, used, v + 1, out);
    img[v] = -1;
    used[u] = 0;
  }
}

}  // namespace

std::vector<Perm> brute_automorphisms(const LabeledDistanceMatrix& ldm) {
  if (ldm.k > 12) throw CapExceeded("brute_automorphisms caps at k <= 12");
  std::vector<std::vector<long long>> profile(ldm.k,
                                              std::vector<long long>(ldm.num_labels() + 1, 0));
  for (int i = 0; i < ldm.k; ++i)
    for (int j = 0; j < ldm.k; ++j)
      if (i != j) ++profile[i][ldm.labels[i][j]];
  std::vector<int> img(ldm.k, -1);
  std::vector<char> used(ldm.k, 0);
  std::vector<Perm> out;
  search(ldm, profile, img, used, 0, out);
  return out;
}

bool brute_m_homog(const LabeledDistanceMatrix& ldm, int m) {
  if (ldm.k > 12) throw CapExceeded("brute_m_homog caps at k <= 12");
  if (m < 1 || m > 4) throw CapExceeded("brute_m_homog caps at 1 <= m <= 4");
  const auto auts = brute_automorphisms(ldm);
  const int k = ldm.k;

  std::vector<std::vector<int>> tuples;
  std::vector<int> t(m, 0);
  while (true) {
    tuples.push_back(t);
    int pos = m - 1;
    while (pos >= 0 && t[pos] == k - 1) t[pos--] = 0;
    if (pos < 0) break;
    ++t[pos];
  }

  std::map<std::vector<int>, std::vector<std::vector<int>>> classes;
  for (const auto& tup : tuples) {
    std::vector<int> key;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) key.push_back(ldm.labels[tup[i]][tup[j]]);
    classes[std::move(key)].push_back(tup);
  }

  for (const auto& [key, members] : classes) {
    std::set<std::vector<int>> orbit;
    for (const auto& g : auts) {
      std::vector<int> image(m);
      for (int i = 0; i < m; ++i) image[i] = g(members[0][i]);
      orbit.insert(std::move(image));
    }
    if (orbit.size() != members.size()) return false;
    for (const auto& tup : members)
      if (!orbit.count(tup)) return false;
  }
  return true;
}

}  // namespace pointhom
