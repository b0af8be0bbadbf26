#include "beamcode/chancode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "beamcode/rng.hpp"

namespace beamcode {

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long result = 1;
  for (int i = 0; i < k; ++i) result = result * (n - i) / (i + 1);
  return result;
}

std::vector<int> column_weights(const BinaryCodebook& code) {
  std::vector<int> weights(code.n_codewords);
  for (int n = 0; n < code.n_codewords; ++n) {
    int w = 0;
    const std::uint8_t* col = code.bits.data() + std::size_t(n) * code.length;
    for (int t = 0; t < code.length; ++t) w += col[t];
    weights[n] = w;
  }
  return weights;
}

int hamming_distance(const BinaryCodebook& code, int i, int j) {
  const std::uint8_t* a = code.bits.data() + std::size_t(i) * code.length;
  const std::uint8_t* b = code.bits.data() + std::size_t(j) * code.length;
  int d = 0;
  for (int t = 0; t < code.length; ++t) d += a[t] != b[t];
  return d;
}

HammingStats stats_from_extremes(int d_min, int d_max) {
  return HammingStats{d_min, d_max, double(d_min) / double(d_max)};
}

double closed_form_value(int d_min, int d_max, int T) {
  const double branch = std::max(1.0 - 2.0 * d_min / T, 2.0 * d_max / T - 1.0);
  return 1.0 - branch * branch;
}

}  // namespace

BinaryCodebook reed_muller(int m, int r) {
  if (m < 0 || r < 0 || r > m || m > 16) {
    throw std::invalid_argument("reed_muller: need 0 <= r <= m <= 16");
  }
  long long k = 0;
  for (int i = 0; i <= r; ++i) k += binomial(m, i);
  const long long n_points = 1LL << m;
  if (k > 24 || (1LL << k) * n_points > (1LL << 26)) {
    throw std::invalid_argument("reed_muller: codebook too large for RM(" +
                                std::to_string(m) + "," + std::to_string(r) + ")");
  }
  const int T = int(n_points);
  const int n_codewords = int(1LL << k);

  // Generator rows: degree ascending, variable subsets lexicographic within a
  // degree. Subsets are enumerated as sorted index tuples via the standard
  // next-combination walk.
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(std::size_t(k));
  for (int deg = 0; deg <= r; ++deg) {
    std::vector<int> vars(deg);
    for (int i = 0; i < deg; ++i) vars[i] = i;
    while (true) {
      std::vector<std::uint8_t> row(T, 1);
      for (int v : vars) {
        for (int j = 0; j < T; ++j) row[j] &= std::uint8_t((j >> v) & 1);
      }
      rows.push_back(std::move(row));
      if (deg == 0) break;
      int i = deg - 1;
      while (i >= 0 && vars[i] == m - deg + i) --i;
      if (i < 0) break;
      ++vars[i];
      for (int j = i + 1; j < deg; ++j) vars[j] = vars[j - 1] + 1;
    }
  }

  BinaryCodebook code;
  code.length = T;
  code.n_codewords = n_codewords;
  code.bits.assign(std::size_t(n_codewords) * T, 0);
  code.linear = true;
  code.rm_m = m;
  code.rm_r = r;

  // Row j is driven by message bit (k-1-j): the degree-0 row is the most
  // significant bit.
  for (int n = 0; n < n_codewords; ++n) {
    std::uint8_t* col = code.bits.data() + std::size_t(n) * T;
    for (long long j = 0; j < k; ++j) {
      if ((n >> (k - 1 - j)) & 1) {
        const std::uint8_t* row = rows[std::size_t(j)].data();
        for (int t = 0; t < T; ++t) col[t] ^= row[t];
      }
    }
  }
  return code;
}

HammingStats hamming_stats(const BinaryCodebook& code) {
  if (code.n_codewords < 2) {
    throw std::invalid_argument("hamming_stats: need at least 2 codewords");
  }
  if (code.linear) {
    // Pairwise distances of a full linear code are exactly the weights of its
    // nonzero codewords.
    const std::vector<int> weights = column_weights(code);
    int d_min = code.length + 1, d_max = -1;
    for (int n = 1; n < code.n_codewords; ++n) {
      d_min = std::min(d_min, weights[n]);
      d_max = std::max(d_max, weights[n]);
    }
    return stats_from_extremes(d_min, d_max);
  }
  int d_min = code.length + 1, d_max = -1;
  for (int i = 0; i < code.n_codewords; ++i) {
    for (int j = i + 1; j < code.n_codewords; ++j) {
      const int d = hamming_distance(code, i, j);
      d_min = std::min(d_min, d);
      d_max = std::max(d_max, d);
    }
  }
  return stats_from_extremes(d_min, d_max);
}

BpskCodebook to_bpsk(const BinaryCodebook& code) {
  BpskCodebook out;
  out.length = code.length;
  out.n_codewords = code.n_codewords;
  out.symbols.resize(code.bits.size());
  for (std::size_t i = 0; i < code.bits.size(); ++i) {
    out.symbols[i] = code.bits[i] ? -1.0 : 1.0;
  }
  return out;
}

int bpsk_inner_product(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size() || u.empty()) {
    throw std::invalid_argument("bpsk_inner_product: equal nonzero lengths required");
  }
  int sum = 0, d_ham = 0;
  for (std::size_t t = 0; t < u.size(); ++t) {
    if ((u[t] != 1.0 && u[t] != -1.0) || (v[t] != 1.0 && v[t] != -1.0)) {
      throw std::invalid_argument("bpsk_inner_product: entries must be exactly +/-1");
    }
    sum += int(u[t] * v[t]);
    d_ham += u[t] != v[t];
  }
  if (sum != int(u.size()) - 2 * d_ham) {
    throw std::logic_error("bpsk_inner_product: identity u'v = T - 2*d_Ham violated");
  }
  return sum;
}

double min_subspace_from_hamming(const HammingStats& stats, int T) {
  if (stats.d_min < 1 || stats.d_min > stats.d_max || stats.d_max > T) {
    throw std::invalid_argument("min_subspace_from_hamming: stats inconsistent with T");
  }
  return closed_form_value(stats.d_min, stats.d_max, T);
}

HammingTarget optimal_hamming_target(double rho, int T) {
  if (!(rho > 0.0 && rho <= 1.0)) {
    throw std::invalid_argument("optimal_hamming_target: rho must lie in (0, 1]");
  }
  const double balanced = T / (1.0 + rho);
  const double ratio = (1.0 - rho) / (1.0 + rho);
  return HammingTarget{balanced, T - balanced, 1.0 - ratio * ratio};
}

BinaryCodebook prune_deterministic(const BinaryCodebook& code, int n) {
  if (n < 2 || n > code.n_codewords) {
    throw std::invalid_argument("prune_deterministic: n must lie in [2, codebook size]");
  }
  BinaryCodebook out;
  out.length = code.length;
  out.n_codewords = n;
  out.bits.assign(code.bits.begin(),
                  code.bits.begin() + std::size_t(n) * code.length);
  out.linear = code.linear && n == code.n_codewords;
  out.rm_m = code.rm_m;
  out.rm_r = code.rm_r;
  return out;
}

PruneTrialStats prune_random(const BinaryCodebook& code, int n, int trials,
                             std::uint64_t seed) {
  if (n < 2 || n > code.n_codewords) {
    throw std::invalid_argument("prune_random: n must lie in [2, codebook size]");
  }
  if (trials < 1) {
    throw std::invalid_argument("prune_random: trials must be >= 1");
  }

  // For a full linear codebook in message order, d(col_i, col_j) is the weight
  // of column i^j, so per-trial statistics reduce to table lookups.
  std::vector<int> weights;
  if (code.linear) weights = column_weights(code);

  std::vector<int> index_pool(code.n_codewords);
  std::vector<int> selected(n);
  PruneTrialStats out;
  out.dmin_values.resize(trials);

  for (int trial = 0; trial < trials; ++trial) {
    RngStream rng = RngStream::substream(seed, 0, std::uint64_t(trial));
    for (int i = 0; i < code.n_codewords; ++i) index_pool[i] = i;
    for (int i = 0; i < n; ++i) {
      const int j = i + int(rng.next_below(std::uint64_t(code.n_codewords - i)));
      std::swap(index_pool[i], index_pool[j]);
      selected[i] = index_pool[i];
    }

    int d_min = code.length + 1, d_max = -1;
    if (code.linear) {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const int w = weights[std::size_t(selected[i] ^ selected[j])];
          d_min = std::min(d_min, w);
          d_max = std::max(d_max, w);
        }
      }
    } else {
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const int d = hamming_distance(code, selected[i], selected[j]);
          d_min = std::min(d_min, d);
          d_max = std::max(d_max, d);
        }
      }
    }
    out.dmin_values[trial] = closed_form_value(d_min, d_max, code.length);
  }

  std::vector<double> sorted = out.dmin_values;
  std::sort(sorted.begin(), sorted.end());
  out.median = sorted[std::size_t(trials - 1) / 2];
  return out;
}

}  // namespace beamcode
