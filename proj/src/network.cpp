#include "pph/network.hpp"

#include <set>
#include <stdexcept>

namespace pph {

namespace {

std::string pos(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return labels;
}

Network make_network(std::vector<std::string> labels, RatMatrix weights) {
  if (weights.rows() != weights.cols())
    throw std::invalid_argument("network: weight matrix is " + std::to_string(weights.rows()) +
                                "x" + std::to_string(weights.cols()) + ", not square");
  std::size_t n = weights.rows();
  if (n == 0) throw std::invalid_argument("network: empty weight matrix");
  if (labels.size() != n)
    throw std::invalid_argument("network: " + std::to_string(labels.size()) + " labels for " +
                                std::to_string(n) + " rows");

  std::set<std::string> seen;
  for (const auto& label : labels)
    if (!seen.insert(label).second)
      throw std::invalid_argument("network: duplicate label '" + label + "'");

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& w = weights.at(i, j);
      if (w < 0)
        throw std::invalid_argument("network: negative weight at " + pos(i, j));
      if (i == j && w != 0)
        throw std::invalid_argument("network: nonzero diagonal at " + pos(i, j));
      if (i != j && w == 0)
        throw std::invalid_argument("network: zero off-diagonal weight at " + pos(i, j));
    }
  }
  return Network{std::move(labels), std::move(weights)};
}

Network make_network(RatMatrix weights) {
  return make_network(default_labels(weights.rows()), std::move(weights));
}

Network transpose(const Network& net) {
  std::size_t n = net.size();
  RatMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = net.weights.at(j, i);
  return Network{net.labels, std::move(w)};
}

Network cycle_network(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_network: need n >= 3");
  RatMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = Rat(static_cast<long>((j + n - i) % n));
  return make_network(std::move(w));
}

std::uint64_t Xorshift64Star::splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;  // xorshift state must be nonzero
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

Rat Xorshift64Star::next_unit() { return rational_u32_over_2pow32((next() >> 32) + 1); }

Network random_network(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_network: need n >= 2");
  Xorshift64Star rng(seed);
  RatMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) w.at(i, j) = rng.next_unit();
  return make_network(std::move(w));
}

Network preprocess_use_table(const RatMatrix& raw, std::vector<std::string> labels) {
  if (raw.rows() != raw.cols()) throw std::invalid_argument("use table: matrix not square");
  std::size_t n = raw.rows();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (raw.at(i, j) < 0)
        throw std::invalid_argument("use table: negative entry at " + pos(i, j));

  RatMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat column_sum;
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) column_sum += raw.at(i, j);
    if (column_sum == 0)
      throw std::invalid_argument("use table: column " + std::to_string(j + 1) +
                                  " has zero off-diagonal sum; normalization undefined");
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      if (raw.at(i, j) == column_sum)
        throw std::invalid_argument(
            "use table: entry at " + pos(i, j) +
            " equals the whole column sum; would produce a zero off-diagonal weight");
      out.at(i, j) = 1 - raw.at(i, j) / column_sum;
    }
  }
  return make_network(std::move(labels), std::move(out));
}

Network scale(const Network& net, const Rat& lambda) {
  if (lambda <= 0) throw std::invalid_argument("scale: factor must be positive");
  std::size_t n = net.size();
  RatMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = lambda * net.weights.at(i, j);
  return Network{net.labels, std::move(w)};
}

}  // namespace pph
