#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pph/matrix.hpp"
#include "pph/rational.hpp"

namespace pph {

// Dissimilarity network: labelled vertex set with a nonnegative weight
// matrix that vanishes exactly on the diagonal. No symmetry or triangle
// inequality is assumed. Immutable after construction.
struct Network {
  std::vector<std::string> labels;
  RatMatrix weights;  // weights.at(i, j) = dissimilarity from vertex i to j

  std::size_t size() const { return labels.size(); }

  bool operator==(const Network& other) const = default;
};

// Validates the network invariants (square, zero diagonal, positive
// off-diagonal, distinct labels) and throws std::invalid_argument with the
// offending 1-based position otherwise.
Network make_network(std::vector<std::string> labels, RatMatrix weights);

// make_network with generated labels x1..xn.
Network make_network(RatMatrix weights);

std::vector<std::string> default_labels(std::size_t n);

Network transpose(const Network& net);

// Directed n-cycle with unit edge weights, completed by shortest-path
// distances: weights[i][j] = (j - i) mod n. Requires n >= 3.
Network cycle_network(std::size_t n);

// Off-diagonal entries i.i.d. uniform on (0,1] with denominator 2^32, drawn
// row-major from a seeded xorshift64* stream. Identical (n, seed) always
// yields the identical network. Requires n >= 2.
Network random_network(std::size_t n, std::uint64_t seed);

// Per-column normalization of an industry use table followed by the
// dissimilarity map x -> 1-x; the diagonal is dropped first. Rejects columns
// whose off-diagonal mass is zero and entries that would map to an
// off-diagonal zero.
Network preprocess_use_table(const RatMatrix& raw, std::vector<std::string> labels);

Network scale(const Network& net, const Rat& lambda);

// Deterministic 64-bit generator used by random_network and the CLI suites:
// one splitmix64 step turns the seed into the xorshift64* state.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);
  std::uint64_t next();
  // Uniform on (0,1]: (top32(next()) + 1) / 2^32.
  Rat next_unit();

  static std::uint64_t splitmix64(std::uint64_t x);

 private:
  std::uint64_t state_;
};

}  // namespace pph
