#include "kvedom/greedy.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "kvedom/kernels.hpp"

namespace kvedom {

std::size_t MulticoverInstance::max_family_size() const {
  std::size_t best = 0;
  for (const auto& f : families) best = std::max(best, f.size());
  return best;
}

std::string MulticoverInstance::dump() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < families.size(); ++i) {
    out << i << ':';
    for (auto x : families[i]) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

MulticoverInstance build_cover_instance(const Graph& g, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  return {g.size(), kernels::omp::cover_families(g), k};
}

std::optional<std::vector<std::size_t>> greedy_multicover(const MulticoverInstance& inst) {
  if (inst.demand < 1) throw InputError("multicover demand must be at least 1");
  std::vector<int> residual(inst.universe_size, 0);
  for (const auto& f : inst.families) {
    for (auto x : f) {
      if (x >= inst.universe_size) throw InputError("family element outside the universe");
      ++residual[x];
    }
  }
  if (std::any_of(residual.begin(), residual.end(),
                  [&](int freq) { return freq < inst.demand; })) {
    return std::nullopt;
  }
  std::fill(residual.begin(), residual.end(), inst.demand);

  // Scores only decrease, so a stale heap entry is refreshed when it surfaces;
  // an entry whose score is still exact is a true maximum.
  using Entry = std::pair<std::size_t, std::size_t>;  // (score, index)
  auto worse = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (std::size_t i = 0; i < inst.families.size(); ++i) {
    if (!inst.families[i].empty()) heap.push({inst.families[i].size(), i});
  }

  std::size_t short_elements = inst.universe_size;
  std::vector<std::size_t> chosen;
  while (short_elements > 0 && !heap.empty()) {
    auto [score, i] = heap.top();
    heap.pop();
    const auto& family = inst.families[i];
    const auto actual = static_cast<std::size_t>(
        std::count_if(family.begin(), family.end(), [&](auto x) { return residual[x] > 0; }));
    if (actual != score) {
      if (actual > 0) heap.push({actual, i});
      continue;
    }
    chosen.push_back(i);
    for (auto x : family) {
      if (residual[x] > 0 && --residual[x] == 0) --short_elements;
    }
  }
  return chosen;
}

std::optional<VertexSet> approx_kve(const Graph& g, int k) {
  auto picks = greedy_multicover(build_cover_instance(g, k));
  if (!picks) return std::nullopt;
  std::vector<Vertex> members;
  members.reserve(picks->size());
  for (auto i : *picks) members.push_back(static_cast<Vertex>(i));
  return VertexSet(std::move(members));
}

}  // namespace kvedom
