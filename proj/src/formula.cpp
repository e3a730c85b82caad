#include "ptk/formula.hpp"

namespace ptk {

namespace {

void require_domain(Count a, Count b, const char* what) {
  if (a < 0 || b < 0) {
    throw DomainError(std::string(what) + ": arguments must be non-negative");
  }
  if (a > kMaxTotal || b > kMaxTotal) {
    throw DomainError(std::string(what) + ": arguments must be <= 2^62");
  }
}

Count ceil_div(Count a, Count b) { return a / b + (a % b != 0 ? 1 : 0); }

struct NDetail {
  Count value = 0;
  std::optional<int> sigma;
};

NDetail n_detail(Count k1, Count k2) {
  require_domain(k1, k2, "N");
  // k1 >= 3 k2 without forming 3 k2, which may exceed the int64 range.
  if (k2 <= k1 / 3) return {k2 + ceil_div(k1 - 3 * k2, 4), std::nullopt};
  const Count third = k1 / 3;
  const Count residual = k2 - third;
  const int s = sigma(k1, residual);
  return {third + residual / 3 + s, s};
}

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::EmptyGraph: return "EmptyGraph";
    case Branch::CaseA: return "CaseA";
    case Branch::CaseBPart1: return "CaseB-I";
    case Branch::CaseBPart2: return "CaseB-II";
  }
  return "?";
}

std::string_view to_string(Subcase s) {
  switch (s) {
    case Subcase::Empty: return "empty";
    case Subcase::Distribute: return "distribute";
    case Subcase::SinglesExact: return "singles-exact";
    case Subcase::SinglesRemainder: return "singles-remainder";
    case Subcase::MixedRemainder: return "mixed-remainder";
    case Subcase::MixedSplit: return "mixed-split";
    case Subcase::MixedExact: return "mixed-exact";
    case Subcase::PairsRemainder: return "pairs-remainder";
    case Subcase::PairsExact: return "pairs-exact";
  }
  return "?";
}

int sigma(Count k1, Count k2_residual) {
  require_domain(k1, k2_residual, "sigma");
  const Count a = k1 % 3;
  const Count b = k2_residual % 3;
  if (a == 0 && b == 0) return 0;
  if (a == 2 && b == 2) return 2;
  return 1;
}

Count n_value(Count k1, Count k2) { return n_detail(k1, k2).value; }

CaseAValue case_a_value(const Decomposition& d) {
  const Count n = d.n();
  if (d.p0 == 0 && n == 0) throw CaseError("case (a) needs a nonempty graph");
  if (d.p0 > 2 * n) throw CaseError("case (a) needs p0 <= 2n");
  // Feasibility of j only gets harder as j grows: the left side gains a
  // part of size >= 4 while the right side loses 2.
  Count pooled = d.p0;
  Count t = 0;
  for (Count j = 1; j <= n; ++j) {
    pooled += d.big[static_cast<std::size_t>(j - 1)];
    if (pooled > 2 * (n - j)) break;
    t = j;
  }
  return {n - t, t};
}

ThicknessResult case_b_value(const Decomposition& d) {
  const Count n = d.n();
  if (d.p0 <= 2 * n) throw CaseError("case (b) needs p0 > 2n");
  ThicknessResult r;
  const Count singles = d.k1 + d.k3;
  if (singles >= 2 * n) {
    r.trace.branch = Branch::CaseBPart1;
    r.trace.n_args = {singles - 2 * n, d.k2 + d.k3};
  } else {
    r.trace.branch = Branch::CaseBPart2;
    r.trace.epsilon = singles % 2;
    // p0 and k1 + k3 have the same parity, so the halving is exact.
    r.trace.n_args = {r.trace.epsilon, (d.p0 - 2 * n - r.trace.epsilon) / 2};
  }
  const auto nd = n_detail(r.trace.n_args.first, r.trace.n_args.second);
  r.value = n + nd.value;
  r.trace.sigma_used = nd.sigma;
  return r;
}

ThicknessResult point_thickness(const PartProfile& profile) {
  if (profile.empty()) return {};
  return point_thickness(decompose(profile));
}

ThicknessResult point_thickness(const Decomposition& d) {
  if (d.p0 == 0 && d.n() == 0) return {};
  if (d.p0 <= 2 * d.n()) {
    const auto a = case_a_value(d);
    ThicknessResult r;
    r.value = a.value;
    r.trace.branch = Branch::CaseA;
    r.trace.t = a.t;
    return r;
  }
  return case_b_value(d);
}

Subcase classify_subcase(const Decomposition& d) {
  const Count n = d.n();
  if (n == 0 && d.p0 == 0) return Subcase::Empty;
  if (d.p0 <= 2 * n) return Subcase::Distribute;
  const Count singles = d.k1 + d.k3;
  if (singles >= 2 * n) {
    const Count r1 = singles - 2 * n;
    const Count r2 = d.k2 + d.k3;
    if (r2 <= r1 / 3) {
      return (r1 - 3 * r2) % 4 == 0 ? Subcase::SinglesExact
                                    : Subcase::SinglesRemainder;
    }
    const Count g1 = r1 % 3;
    const Count g2 = (r2 - r1 / 3) % 3;
    if (g1 == 0 && g2 == 0) return Subcase::MixedExact;
    if (g1 == 2 && g2 == 2) return Subcase::MixedSplit;
    return Subcase::MixedRemainder;
  }
  const Count eps = singles % 2;
  const Count pairs_left = (d.p0 - 2 * n - eps) / 2;
  return eps == 0 && pairs_left % 3 == 0 ? Subcase::PairsExact
                                         : Subcase::PairsRemainder;
}

}  // namespace ptk
