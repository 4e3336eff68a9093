#include "pph/sparse.hpp"

namespace pph {

void sparse_axpy(SparseVec& target, const Rat& coeff, const SparseVec& source) {
  if (coeff == 0 || source.empty()) return;
  SparseVec out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() && j < source.size()) {
    if (target[i].first < source[j].first) {
      out.push_back(std::move(target[i++]));
    } else if (target[i].first > source[j].first) {
      out.emplace_back(source[j].first, coeff * source[j].second);
      ++j;
    } else {
      Rat v = target[i].second + coeff * source[j].second;
      if (v != 0) out.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  while (i < target.size()) out.push_back(std::move(target[i++]));
  for (; j < source.size(); ++j) out.emplace_back(source[j].first, coeff * source[j].second);
  target = std::move(out);
}

const SparseVec* SparseEchelon::row_for(CellId id) const {
  auto it = pivot_.find(id);
  return it == pivot_.end() ? nullptr : &rows_[it->second];
}

void SparseEchelon::reduce_leading(SparseVec& v) const {
  while (!v.empty()) {
    const SparseVec* row = row_for(v.front().first);
    if (!row) return;
    sparse_axpy(v, -v.front().second, *row);
  }
}

bool SparseEchelon::insert(SparseVec v) {
  reduce_leading(v);
  if (v.empty()) return false;
  Rat inv = 1 / v.front().second;
  for (auto& [id, c] : v) c *= inv;
  pivot_.emplace(v.front().first, rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

long rank_beyond(const std::vector<SparseVec>& vs, const SparseEchelon& base) {
  // Alternate between base and local eliminations: a local step can expose a
  // leading id that is again a base pivot.
  std::vector<SparseVec> rows;
  std::unordered_map<CellId, std::size_t> pivot;
  long count = 0;
  for (const SparseVec& v0 : vs) {
    SparseVec v = v0;
    for (;;) {
      base.reduce_leading(v);
      if (v.empty()) break;
      auto it = pivot.find(v.front().first);
      if (it == pivot.end()) {
        Rat inv = 1 / v.front().second;
        for (auto& [id, c] : v) c *= inv;
        pivot.emplace(v.front().first, rows.size());
        rows.push_back(std::move(v));
        ++count;
        break;
      }
      sparse_axpy(v, -v.front().second, rows[it->second]);
    }
  }
  return count;
}

const KernelTracker::TrackedRow* KernelTracker::row_for(CellId id) const {
  auto it = pivot_.find(id);
  return it == pivot_.end() ? nullptr : &rows_[it->second];
}

SparseVec KernelTracker::offer(SparseVec column, CellId key) {
  SparseVec combo{{key, Rat(1)}};
  while (!column.empty()) {
    const TrackedRow* row = row_for(column.front().first);
    if (!row) break;
    Rat f = -column.front().second;
    sparse_axpy(column, f, row->vec);
    sparse_axpy(combo, f, row->combo);
  }
  if (column.empty()) return combo;

  Rat inv = 1 / column.front().second;
  for (auto& [id, c] : column) c *= inv;
  for (auto& [id, c] : combo) c *= inv;
  pivot_.emplace(column.front().first, rows_.size());
  rows_.push_back(TrackedRow{std::move(column), std::move(combo)});
  return {};
}

}  // namespace pph
