#include "serial_topsis.hpp"

#include <cmath>

namespace ftopsis_reference {

Result evaluate(const Problem& p) {
  const int m = p.alternatives;
  const int n = p.criteria;
  const int K = p.decision_makers;
  Result r;
  r.aggregate.resize(m * n);
  r.normalized.resize(m * n);
  r.weighted.resize(m * n);
  r.d_star.assign(m, 0.0);
  r.d_minus.assign(m, 0.0);
  r.closeness.assign(m, 0.0);

  // Pool ratings and weights: min of lowers, mean of modes, max of uppers.
  for (int i = 0; i < m; i++) {
    for (int j = 0; j < n; j++) {
      Triple first = p.ratings[(0 * m + i) * n + j];
      double lo = first[0], sum = 0.0, hi = first[2];
      for (int k = 0; k < K; k++) {
        const Triple& t = p.ratings[(k * m + i) * n + j];
        if (t[0] < lo) lo = t[0];
        sum += t[1];
        if (t[2] > hi) hi = t[2];
      }
      r.aggregate[i * n + j] = {lo, sum / K, hi};
    }
  }
  std::vector<Triple> w(n);
  for (int j = 0; j < n; j++) {
    double lo = p.weights[j][0], sum = 0.0, hi = p.weights[j][2];
    for (int k = 0; k < K; k++) {
      const Triple& t = p.weights[k * n + j];
      if (t[0] < lo) lo = t[0];
      sum += t[1];
      if (t[2] > hi) hi = t[2];
    }
    w[j] = {lo, sum / K, hi};
  }

  // Normalize each column.
  for (int j = 0; j < n; j++) {
    if (p.cost[j]) {
      double amin = r.aggregate[j][0];
      for (int i = 1; i < m; i++)
        if (r.aggregate[i * n + j][0] < amin) amin = r.aggregate[i * n + j][0];
      for (int i = 0; i < m; i++) {
        const Triple& x = r.aggregate[i * n + j];
        r.normalized[i * n + j] = {amin / x[2], amin / x[1], amin / x[0]};
      }
    } else {
      double cmax = r.aggregate[j][2];
      for (int i = 1; i < m; i++)
        if (r.aggregate[i * n + j][2] > cmax) cmax = r.aggregate[i * n + j][2];
      for (int i = 0; i < m; i++) {
        const Triple& x = r.aggregate[i * n + j];
        r.normalized[i * n + j] = {x[0] / cmax, x[1] / cmax, x[2] / cmax};
      }
    }
  }

  for (int i = 0; i < m; i++)
    for (int j = 0; j < n; j++)
      for (int c = 0; c < 3; c++) r.weighted[i * n + j][c] = r.normalized[i * n + j][c] * w[j][c];

  // Crisp ideals per column, then summed vertex distances per row.
  std::vector<double> best(n), worst(n);
  for (int j = 0; j < n; j++) {
    best[j] = r.weighted[j][2];
    worst[j] = r.weighted[j][0];
    for (int i = 1; i < m; i++) {
      if (r.weighted[i * n + j][2] > best[j]) best[j] = r.weighted[i * n + j][2];
      if (r.weighted[i * n + j][0] < worst[j]) worst[j] = r.weighted[i * n + j][0];
    }
  }
  for (int i = 0; i < m; i++) {
    for (int j = 0; j < n; j++) {
      const Triple& v = r.weighted[i * n + j];
      double sp = 0.0, sm = 0.0;
      for (int c = 0; c < 3; c++) {
        sp += (v[c] - best[j]) * (v[c] - best[j]);
        sm += (v[c] - worst[j]) * (v[c] - worst[j]);
      }
      r.d_star[i] += std::sqrt(sp / 3.0);
      r.d_minus[i] += std::sqrt(sm / 3.0);
    }
    double total = r.d_star[i] + r.d_minus[i];
    r.closeness[i] = total == 0.0 ? 1.0 : r.d_minus[i] / total;
  }
  return r;
}

}  // namespace ftopsis_reference
