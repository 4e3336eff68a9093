#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pph/rational.hpp"

namespace pph {

// Basis elements of chain spaces (paths, simplices) are keyed by integer
// cell ids chosen by the frontends; ids are stable across filtration levels
// so that a vector computed at one level embeds in any later level.
using CellId = std::int64_t;

// Sparse rational vector: ascending ids, no zero coefficients.
using SparseVec = std::vector<std::pair<CellId, Rat>>;

// target += coeff * source (merge of sorted supports).
void sparse_axpy(SparseVec& target, const Rat& coeff, const SparseVec& source);

// Row echelon accumulator. Every stored row has a unique leading (smallest)
// id and leading coefficient 1; rows are not reduced against each other,
// which is enough for rank and span-membership queries.
class SparseEchelon {
 public:
  // Reduce-then-insert. Returns false when v lies in the current span.
  bool insert(SparseVec v);

  // Repeatedly eliminates the leading term of v against stored rows.
  // Afterwards v is empty iff it lies in the span.
  void reduce_leading(SparseVec& v) const;

  std::size_t dim() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }

 private:
  const SparseVec* row_for(CellId id) const;

  std::vector<SparseVec> rows_;
  std::unordered_map<CellId, std::size_t> pivot_;
};

// Number of vectors in vs that are independent modulo span(base) and each
// other, i.e. dim((span(vs) + span(base)) / span(base)).
long rank_beyond(const std::vector<SparseVec>& vs, const SparseEchelon& base);

// Incremental kernel computation for a matrix presented column by column.
// Feed the columns in a fixed order; whenever a column is dependent on the
// previous ones, the recorded combination (over column keys) is a kernel
// vector. The emitted combinations form a basis of the kernel.
class KernelTracker {
 public:
  // `key` identifies the column in the combination output.
  // Returns the kernel vector produced by this column, or an empty vector
  // when the column was independent.
  SparseVec offer(SparseVec column, CellId key);

  std::size_t rank() const { return rows_.size(); }

 private:
  struct TrackedRow {
    SparseVec vec;    // leading coefficient 1
    SparseVec combo;  // combination of offered columns producing vec
  };
  const TrackedRow* row_for(CellId id) const;

  std::vector<TrackedRow> rows_;
  std::unordered_map<CellId, std::size_t> pivot_;
};

}  // namespace pph
