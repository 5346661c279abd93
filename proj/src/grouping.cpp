#include "taxmine/grouping.hpp"

#include <algorithm>
#include <utility>

#include "taxmine/errors.hpp"

namespace taxmine {

const char* to_string(SimilarityMeasure measure) {
  if (measure == SimilarityMeasure::interval) return "interval";
  return to_string(static_cast<MeasureKind>(static_cast<int>(measure) - 1));
}

std::optional<SimilarityMeasure> similarity_measure_from_name(std::string_view name) {
  if (name == "interval") return SimilarityMeasure::interval;
  if (const auto kind = measure_from_name(name)) {
    return static_cast<SimilarityMeasure>(static_cast<int>(*kind) + 1);
  }
  return std::nullopt;
}

CharacterizationSet intersect_characterizations(const CharacterizationSet& first,
                                                const CharacterizationSet& second,
                                                std::string new_label) {
  CharacterizationSet out{std::move(new_label), first.kappa_threshold, {}};
  for (const ValueDisjunction& element : first.elements) {
    if (second.contains(element)) out.elements.push_back(element);
  }
  return out;
}

namespace {

struct LiveGroup {
  TaxonomyNode node;
  std::size_t creation_index = 0;
};

// Total variant of the interval similarity: empty sides give [0, 0].
IntervalSimilarity cell_interval(const ContingencyCounts& counts) {
  if (counts.a + counts.b == 0 || counts.a + counts.c == 0) return {};
  return {Rational(counts.a, std::max(counts.a + counts.b, counts.a + counts.c)),
          Rational(counts.a, std::min(counts.a + counts.b, counts.a + counts.c))};
}

std::vector<ValueDisjunction> element_universe(const std::vector<LiveGroup>& live) {
  std::vector<ValueDisjunction> universe;
  for (const LiveGroup& group : live) {
    for (const ValueDisjunction& element : group.node.characterization.elements) {
      if (std::find(universe.begin(), universe.end(), element) == universe.end()) {
        universe.push_back(element);
      }
    }
  }
  return universe;
}

MatrixSnapshot snapshot_matrix(const std::vector<LiveGroup>& live, SimilarityMeasure measure_kind,
                               int step) {
  const std::vector<ValueDisjunction> universe = element_universe(live);
  MatrixSnapshot snapshot;
  snapshot.step = step;
  for (const LiveGroup& group : live) snapshot.groups.push_back(group.node.id);
  for (std::size_t i = 0; i < live.size(); ++i) {
    for (std::size_t j = i + 1; j < live.size(); ++j) {
      MatrixCell cell;
      cell.left = live[i].node.id;
      cell.right = live[j].node.id;
      cell.counts = contingency(live[i].node.characterization, live[j].node.characterization,
                                universe);
      cell.interval = cell_interval(cell.counts);
      if (measure_kind != SimilarityMeasure::interval) {
        const auto kind = static_cast<MeasureKind>(static_cast<int>(measure_kind) - 1);
        try {
          cell.value = measure(cell.counts, kind);
        } catch (const UndefinedError&) {
          cell.value = std::nullopt;
        }
      }
      snapshot.cells.push_back(std::move(cell));
    }
  }
  return snapshot;
}

bool pair_id_less(const MatrixCell& x, const MatrixCell& y) {
  if (x.left != y.left) return x.left < y.left;
  return x.right < y.right;
}

// Deterministic selection among mergeable cells: similarity first, then
// interval comparison, then the lexicographically smallest pair of ids.
bool cell_preferred(const MatrixCell& candidate, const MatrixCell& best,
                    SimilarityMeasure measure_kind) {
  if (measure_kind != SimilarityMeasure::interval) {
    if (*candidate.value != *best.value) return *candidate.value > *best.value;
  }
  const auto order = compare_intervals(candidate.interval, best.interval);
  if (order != std::strong_ordering::equal) return order == std::strong_ordering::greater;
  return pair_id_less(candidate, best);
}

bool meets_threshold(const MatrixCell& cell, SimilarityMeasure measure_kind,
                     const Rational& theta_g) {
  if (measure_kind == SimilarityMeasure::interval) return cell.interval.hi >= theta_g;
  return *cell.value >= to_double(theta_g);
}

}  // namespace

GroupingResult group(const DecisionTable& table, const GroupingConfig& config) {
  const std::vector<std::string>& classes = table.decision().domain;
  if (classes.size() < 2) throw ConfigError("grouping needs at least two classes");

  std::vector<LiveGroup> live;
  live.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    TaxonomyNode leaf{classes[i], characterize(table, classes[i], config.delta_kappa), {}, {}};
    live.push_back(LiveGroup{std::move(leaf), i});
  }

  GroupingResult result;
  std::size_t next_index = classes.size();
  int merges_done = 0;

  while (live.size() >= 2) {
    MatrixSnapshot snapshot = snapshot_matrix(live, config.measure, 2 + merges_done);

    // A merge candidate must share at least one element, have a defined
    // similarity and clear the grouping threshold.
    const MatrixCell* best = nullptr;
    for (const MatrixCell& cell : snapshot.cells) {
      if (cell.counts.a < 1) continue;
      if (config.measure != SimilarityMeasure::interval && !cell.value) continue;
      if (!meets_threshold(cell, config.measure, config.theta_g)) continue;
      if (!best || cell_preferred(cell, *best, config.measure)) best = &cell;
    }

    std::size_t left_pos = 0;
    std::size_t right_pos = 0;
    IntervalSimilarity similarity;
    if (best) {
      const auto position = [&](const std::string& id) {
        for (std::size_t i = 0; i < live.size(); ++i) {
          if (live[i].node.id == id) return i;
        }
        throw Error("lost live group '" + id + "'");
      };
      left_pos = position(best->left);
      right_pos = position(best->right);
      similarity = best->interval;
    } else if (config.single_tree && Rational(0) >= config.theta_g) {
      // Zero-similarity completion join over the two oldest roots.
      left_pos = 0;
      for (std::size_t i = 1; i < live.size(); ++i) {
        if (live[i].creation_index < live[left_pos].creation_index) left_pos = i;
      }
      right_pos = left_pos == 0 ? 1 : 0;
      for (std::size_t i = 0; i < live.size(); ++i) {
        if (i == left_pos) continue;
        if (live[i].creation_index < live[right_pos].creation_index) right_pos = i;
      }
    } else {
      result.matrices.push_back(std::move(snapshot));
      break;
    }
    result.matrices.push_back(std::move(snapshot));

    LiveGroup& left = live[left_pos];
    LiveGroup& right = live[right_pos];
    const std::string id = "D" + std::to_string(next_index + 1);

    TaxonomyNode merged{id,
                        intersect_characterizations(left.node.characterization,
                                                    right.node.characterization, id),
                        {},
                        similarity};
    merged.children.push_back(std::move(left.node));
    merged.children.push_back(std::move(right.node));

    result.trace.push_back(
        MergeRecord{merged.children[0].id, merged.children[1].id, similarity, id});

    // The merged group takes the position of the earlier member.
    const std::size_t keep = std::min(left_pos, right_pos);
    const std::size_t drop = std::max(left_pos, right_pos);
    live[keep] = LiveGroup{std::move(merged), next_index};
    live.erase(live.begin() + static_cast<std::ptrdiff_t>(drop));

    ++next_index;
    ++merges_done;
  }

  for (LiveGroup& group : live) result.forest.push_back(std::move(group.node));
  return result;
}

}  // namespace taxmine
