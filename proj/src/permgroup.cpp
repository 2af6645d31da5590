#include "pointhom/permgroup.hpp"

#include <algorithm>
#include <deque>

#include "pointhom/errors.hpp"

namespace pointhom {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) throw ParamError("not a permutation");
    seen[v] = 1;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::compose(const Perm& f, const Perm& g) {
  Perm out;
  out.img_.resize(f.degree());
  for (int i = 0; i < f.degree(); ++i) out.img_[i] = f.img_[g.img_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(degree());
  for (int i = 0; i < degree(); ++i) out.img_[img_[i]] = i;
  return out;
}

PermGroup PermGroup::from_generators(const std::vector<Perm>& gens, int degree,
                                     const std::vector<int>& base_prefix) {
  PermGroup g;
  g.degree_ = degree;
  for (const auto& p : gens) {
    if (p.degree() != degree) throw ParamError("generator degree mismatch");
    if (!p.is_identity()) g.input_gens_.push_back(p);
  }
  g.build(g.input_gens_, base_prefix);
  return g;
}

void PermGroup::append_base_point(int p) {
  base_.push_back(p);
  levels_.emplace_back();
  levels_.back().base_point = p;
}

std::vector<Perm> PermGroup::level_gens(int i) const {
  std::vector<Perm> out;
  for (const auto& g : strong_gens_) {
    bool fixes_prefix = true;
    for (int l = 0; l < i; ++l)
      if (g(base_[l]) != base_[l]) { fixes_prefix = false; break; }
    if (fixes_prefix) out.push_back(g);
  }
  return out;
}

void PermGroup::recompute_level(int i) {
  Level& lv = levels_[i];
  lv.gens = level_gens(i);
  lv.orbit.clear();
  lv.transversal.assign(degree_, Perm());
  lv.in_orbit.assign(degree_, 0);
  lv.orbit.push_back(lv.base_point);
  lv.in_orbit[lv.base_point] = 1;
  lv.transversal[lv.base_point] = Perm(degree_);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    const int p = lv.orbit[head];
    for (const auto& s : lv.gens) {
      const int q = s(p);
      if (!lv.in_orbit[q]) {
        lv.in_orbit[q] = 1;
        lv.orbit.push_back(q);
        lv.transversal[q] = Perm::compose(s, lv.transversal[p]);
      }
    }
  }
}

std::pair<Perm, int> PermGroup::strip(const Perm& g, int from_level) const {
  Perm h = g;
  for (int l = from_level; l < static_cast<int>(levels_.size()); ++l) {
    const int p = h(levels_[l].base_point);
    if (!levels_[l].in_orbit[p]) return {h, l};
    h = Perm::compose(levels_[l].transversal[p].inverse(), h);
  }
  return {h, static_cast<int>(levels_.size())};
}

void PermGroup::build(std::vector<Perm> gens, const std::vector<int>& base_prefix) {
  strong_gens_ = std::move(gens);
  for (int p : base_prefix) {
    if (p < 0 || p >= degree_) throw ParamError("base point out of range");
    append_base_point(p);
  }
  // Every strong generator must move some base point.
  auto ensure_moved = [&](const Perm& g) {
    for (int b : base_)
      if (g(b) != b) return;
    for (int p = 0; p < degree_; ++p)
      if (g(p) != p) { append_base_point(p); return; }
  };
  for (const auto& g : strong_gens_) ensure_moved(g);
  if (levels_.empty()) {  // trivial group
    order_ = 1;
    return;
  }
  for (int i = 0; i < static_cast<int>(levels_.size()); ++i) recompute_level(i);

  // Deterministic Schreier-Sims: verify levels bottom-up; on a failed strip,
  // record the residue as a strong generator and jump back down.
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    recompute_level(i);
    const Level& lv = levels_[i];
    bool complete = true;
    for (std::size_t head = 0; head < lv.orbit.size() && complete; ++head) {
      const int p = lv.orbit[head];
      for (const auto& s : lv.gens) {
        Perm schreier = Perm::compose(lv.transversal[s(p)].inverse(),
                                      Perm::compose(s, lv.transversal[p]));
        if (schreier.is_identity()) continue;
        auto [residue, j] = strip(schreier, i + 1);
        if (residue.is_identity() && j == static_cast<int>(levels_.size())) continue;
        if (j == static_cast<int>(levels_.size())) ensure_moved(residue);
        strong_gens_.push_back(residue);
        for (int l = i + 1; l <= std::min(j, static_cast<int>(levels_.size()) - 1); ++l)
          recompute_level(l);
        i = std::min(j, static_cast<int>(levels_.size()) - 1);
        complete = false;
        break;
      }
    }
    if (complete) --i;
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= static_cast<long long>(lv.orbit.size());
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  if (g.is_identity()) return true;
  auto [residue, level] = strip(g, 0);
  return level == static_cast<int>(levels_.size()) && residue.is_identity();
}

std::vector<int> PermGroup::orbit(int p) const {
  std::vector<int> orb{p};
  std::vector<char> seen(degree_, 0);
  seen[p] = 1;
  for (std::size_t head = 0; head < orb.size(); ++head)
    for (const auto& s : input_gens_) {
      const int q = s(orb[head]);
      if (!seen[q]) { seen[q] = 1; orb.push_back(q); }
    }
  return orb;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return true;
  return static_cast<int>(orbit(0).size()) == degree_;
}

std::set<std::vector<int>> PermGroup::orbit_of_tuple(const std::vector<int>& t) const {
  for (int p : t)
    if (p < 0 || p >= degree_) throw ParamError("tuple entry out of range");
  std::set<std::vector<int>> seen{t};
  std::deque<std::vector<int>> queue{t};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : input_gens_) {
      std::vector<int> next(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) next[i] = s(cur[i]);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

BigInt PermGroup::orbit_of_tuple_size(const std::vector<int>& t) const {
  return order_ / tuple_stabilizer(t).order();
}

bool PermGroup::tuples_equivalent(const std::vector<int>& a, const std::vector<int>& b) const {
  if (a.size() != b.size()) return false;
  if (a == b) return true;
  std::set<std::vector<int>> seen{a};
  std::deque<std::vector<int>> queue{a};
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : input_gens_) {
      std::vector<int> next(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) next[i] = s(cur[i]);
      if (next == b) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

PermGroup PermGroup::tuple_stabilizer(const std::vector<int>& t) const {
  if (t.empty()) return *this;
  PermGroup chained;
  chained.degree_ = degree_;
  chained.input_gens_ = input_gens_;
  chained.build(input_gens_, t);
  std::vector<Perm> stab_gens;
  for (const auto& g : chained.strong_gens_) {
    bool fixes = true;
    for (int p : t)
      if (g(p) != p) { fixes = false; break; }
    if (fixes) stab_gens.push_back(g);
  }
  return from_generators(stab_gens, degree_);
}

std::string PermGroup::order_string() const {
  return order_.str();
}

}  // namespace pointhom
