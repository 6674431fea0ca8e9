#include "parcount/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace parcount {

namespace {

// m_mu * p_r in the monomial basis: either r joins as a new part or is
// added to one existing part value; the coefficient is the multiplicity of
// the grown part in the result.
MonomialVec multiply_by_power_sum(const MonomialVec& f, int r) {
  MonomialVec out;
  for (const auto& [mu, coeff] : f) {
    {
      std::vector<int> parts = mu.parts;
      parts.push_back(r);
      Partition lambda(parts);
      out[lambda] += coeff * lambda.multiplicity(r);
    }
    std::vector<int> seen;
    for (size_t i = 0; i < mu.parts.size(); ++i) {
      int v = mu.parts[i];
      if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
      seen.push_back(v);
      std::vector<int> parts = mu.parts;
      parts[i] += r;
      Partition lambda(parts);
      out[lambda] += coeff * lambda.multiplicity(v + r);
    }
  }
  return out;
}

}  // namespace

MonomialVec power_sum_in_monomials(const Partition& rho) {
  MonomialVec f;
  f[Partition(std::vector<int>{})] = Rat(1);
  for (int r : rho.parts) f = multiply_by_power_sum(f, r);
  return f;
}

int HallLittlewood::position(const Partition& p) const {
  for (size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i] == p) return static_cast<int>(i);
  throw InvariantError("partition not in index: " + p.to_string());
}

HallLittlewood::HallLittlewood(int n) : n_(n), parts_(partitions_of(n)) {
  const int N = static_cast<int>(parts_.size());

  // A[rho][lambda]: coefficient of m_lambda in p_rho.
  std::vector<std::vector<Rat>> A(N, std::vector<Rat>(N, Rat(0)));
  for (int r = 0; r < N; ++r) {
    MonomialVec mv = power_sum_in_monomials(parts_[r]);
    for (const auto& [lam, c] : mv) A[r][position(lam)] = c;
  }

  // B = A^{-1}: m in the power-sum basis.
  std::vector<std::vector<Rat>> B(N, std::vector<Rat>(N, Rat(0)));
  {
    std::vector<std::vector<Rat>> work = A;
    for (int i = 0; i < N; ++i) B[i][i] = Rat(1);
    for (int col = 0; col < N; ++col) {
      int pivot = -1;
      for (int r = col; r < N; ++r)
        if (work[r][col] != 0) {
          pivot = r;
          break;
        }
      PARCOUNT_CHECK(pivot >= 0, "power-sum/monomial transition is singular");
      std::swap(work[pivot], work[col]);
      std::swap(B[pivot], B[col]);
      Rat d = work[col][col];
      for (int j = 0; j < N; ++j) {
        work[col][j] /= d;
        B[col][j] /= d;
      }
      for (int r = 0; r < N; ++r) {
        if (r == col || work[r][col] == 0) continue;
        Rat f = work[r][col];
        for (int j = 0; j < N; ++j) {
          work[r][j] -= f * work[col][j];
          B[r][j] -= f * B[col][j];
        }
      }
    }
  }
  // With p_rho = sum_lambda A[rho][lambda] m_lambda, the inverse reads
  // m_lambda = sum_rho B[lambda][rho] p_rho.

  // Deformed Hall pairing on power sums: <p_rho, p_rho> = z_rho / prod(1-t^{rho_i}).
  std::vector<RatFunc> p_norm(N);
  for (int r = 0; r < N; ++r) {
    QPoly den = QPoly::constant(Rat(1));
    for (int part : parts_[r].parts)
      den = den * (QPoly::constant(Rat(1)) - QPoly::monomial(Rat(1), part));
    p_norm[r] = RatFunc(QPoly::constant(Rat(z_order(parts_[r]))), den);
  }

  // Gram[l][m] = <m_l, m_m>.
  std::vector<std::vector<RatFunc>> gram(N, std::vector<RatFunc>(N));
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      RatFunc s;
      for (int r = 0; r < N; ++r) {
        if (B[a][r] == 0 || B[b][r] == 0) continue;
        s = s + RatFunc::constant(B[a][r] * B[b][r]) * p_norm[r];
      }
      gram[a][b] = s;
      gram[b][a] = s;
    }

  auto pair_vec = [&](const std::vector<RatFunc>& u, const std::vector<RatFunc>& v) {
    RatFunc s;
    for (int a = 0; a < N; ++a) {
      if (u[a].is_zero()) continue;
      for (int b = 0; b < N; ++b) {
        if (v[b].is_zero()) continue;
        s = s + u[a] * v[b] * gram[a][b];
      }
    }
    return s;
  };

  // Gram-Schmidt in increasing dominance order (reverse of parts_).
  P_in_m_.assign(N, std::vector<RatFunc>(N));
  std::vector<RatFunc> P_norm(N);
  for (int i = N - 1; i >= 0; --i) {
    std::vector<RatFunc> v(N);
    v[i] = RatFunc::constant(Rat(1));  // m_{parts_[i]}
    for (int j = N - 1; j > i; --j) {
      std::vector<RatFunc> m_i(N);
      m_i[i] = RatFunc::constant(Rat(1));
      RatFunc c = pair_vec(m_i, P_in_m_[j]) / P_norm[j];
      if (c.is_zero()) continue;
      for (int a = 0; a < N; ++a) v[a] = v[a] - c * P_in_m_[j][a];
    }
    P_in_m_[i] = v;
    P_norm[i] = pair_vec(v, v);
    PARCOUNT_CHECK(!P_norm[i].is_zero(), "degenerate Hall pairing");
  }

  // Unitriangularity sanity: coordinate of m_lambda in P_lambda is 1 and
  // higher partitions do not occur.
  for (int i = 0; i < N; ++i) {
    PARCOUNT_CHECK(P_in_m_[i][i] == RatFunc::constant(Rat(1)), "Hall-Littlewood not unitriangular");
    for (int j = 0; j < i; ++j)
      PARCOUNT_CHECK(P_in_m_[i][j].is_zero(), "Hall-Littlewood has a higher-order term");
  }

  // Solve p_rho = sum_lambda X[lambda][rho] P_lambda, processing lambda from
  // the dominance top; entries must land in Z[t].
  X_.assign(N, std::vector<QPoly>(N));
  for (int r = 0; r < N; ++r) {
    std::vector<RatFunc> residual(N);
    for (int a = 0; a < N; ++a) residual[a] = RatFunc::constant(A[r][a]);
    for (int i = 0; i < N; ++i) {
      RatFunc c = residual[i];
      if (!c.is_zero())
        for (int a = 0; a < N; ++a) residual[a] = residual[a] - c * P_in_m_[i][a];
      const QPoly& poly = c.as_polynomial();
      PARCOUNT_CHECK(poly.integer_coefficients(),
                     "transition coefficient not in Z[t]: " + poly.to_string("t"));
      X_[i][r] = poly;
    }
    for (int a = 0; a < N; ++a)
      PARCOUNT_CHECK(residual[a].is_zero(), "triangular solve left a residual");
  }
}

const HallLittlewood& hall_littlewood_transition(int n, int bound) {
  if (n > bound)
    throw BoundError("symmetric-function rank " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(bound));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<HallLittlewood>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<HallLittlewood>(n)).first;
  return *it->second;
}

}  // namespace parcount
