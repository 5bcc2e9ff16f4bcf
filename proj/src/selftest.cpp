#include "powmat/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "powmat/census.hpp"
#include "powmat/dynamics.hpp"
#include "powmat/format.hpp"
#include "powmat/power_matrix.hpp"

namespace powmat {

ReducedPoly random_poly(const Field& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field->q() - 1);
  std::vector<Elem> c(field->q());
  for (auto& e : c) e = Elem{dist(rng)};
  return ReducedPoly(field, std::move(c));
}

ReducedPoly random_permutation_poly(const Field& field, std::mt19937_64& rng) {
  std::vector<Elem> values(field->q());
  for (std::uint32_t a = 0; a < field->q(); ++a) values[a] = Elem{a};
  std::shuffle(values.begin(), values.end(), rng);
  return interpolate(field, values);
}

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed || c.informational; });
}

std::string SelftestReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.informational ? "[INFO] " : (c.passed ? "[PASS] " : "[FAIL] ")) << c.name << " ("
        << c.cases << " cases)";
    if (!c.witness.empty()) out << " witness: " << c.witness;
    out << '\n';
  }
  out << (passed() ? "selftest passed" : "selftest FAILED") << '\n';
  return out.str();
}

namespace {

using Probe = std::function<std::optional<std::string>()>;

CheckResult run_check(std::string name, std::size_t cases, const Probe& probe) {
  CheckResult r{std::move(name), true, 0, {}, false};
  for (std::size_t i = 0; i < cases; ++i) {
    ++r.cases;
    if (auto w = probe()) {
      r.passed = false;
      r.witness = *w;
      break;
    }
  }
  return r;
}

std::string show(const ReducedPoly& f) { return "f=" + format_poly(f, PolyFormat::Coefficients); }

}  // namespace

SelftestReport run_selftest(const Field& field, const SelftestOptions& options) {
  std::mt19937_64 rng(options.seed);
  const std::size_t n = options.samples;
  const std::uint32_t q = field->q();
  SelftestReport report;
  auto& checks = report.checks;

  checks.push_back(run_check("polynomial product is pointwise", n, [&]() -> std::optional<std::string> {
    const auto f = random_poly(field, rng), g = random_poly(field, rng);
    const auto h = mul_reduced(f, g);
    for (std::uint32_t a = 0; a < q; ++a) {
      if (evaluate(h, Elem{a}) != field->mul(evaluate(f, Elem{a}), evaluate(g, Elem{a}))) {
        return show(f) + " g=" + format_poly(g, PolyFormat::Coefficients);
      }
    }
    return std::nullopt;
  }));

  checks.push_back(run_check("composition by powers == by interpolation", n,
                             [&]() -> std::optional<std::string> {
    const auto f = random_poly(field, rng), g = random_poly(field, rng);
    if (compose_by_powers(g, f) != compose_by_interpolation(g, f)) {
      return show(f) + " g=" + format_poly(g, PolyFormat::Coefficients);
    }
    return std::nullopt;
  }));

  checks.push_back(run_check("A(f) direct == closed form", n, [&]() -> std::optional<std::string> {
    const auto f = random_poly(field, rng);
    if (build_direct(f) != build_interpolation(f)) return show(f);
    return std::nullopt;
  }));

  // The zero-matrix convention for f_0 breaks the identity when f or g o f is f_0.
  checks.push_back(run_check("A(f) A(g) == A(g o f) for f, g o f nonzero", n,
                             [&]() -> std::optional<std::string> {
    const auto f = random_poly(field, rng), g = random_poly(field, rng);
    const auto gf = compose(g, f);
    if (f.is_zero() || gf.is_zero()) return std::nullopt;
    Matrix rhs = build_direct(gf);
    if (options.inject_fault) rhs(0, 1) = field->add(rhs(0, 1), field->one());
    if (matmul(build_direct(f), build_direct(g)) != rhs) {
      return show(f) + " g=" + format_poly(g, PolyFormat::Coefficients);
    }
    return std::nullopt;
  }));

  checks.push_back(run_check("rank A(f) == |V_f| for f nonzero", n, [&]() -> std::optional<std::string> {
    const auto f = random_poly(field, rng);
    if (f.is_zero()) return std::nullopt;
    if (value_set_size_via_rank(f) != census_brute(f).size) return show(f);
    return std::nullopt;
  }));

  checks.push_back(run_check("Konig-Rados circulant counts", n, [&]() -> std::optional<std::string> {
    const auto f = random_poly(field, rng);
    const auto census = census_brute(f);
    for (std::uint32_t c = 0; c < q; ++c) {
      if (konig_rados_count(f, Elem{c}).multiplicity != census.multiplicity[c]) {
        return show(f) + " c=" + std::to_string(c);
      }
    }
    return std::nullopt;
  }));

  checks.push_back(run_check("last-row test == injectivity", n, [&]() -> std::optional<std::string> {
    const auto f = (rng() & 1) ? random_permutation_poly(field, rng) : random_poly(field, rng);
    if (hermite_last_row(build_direct(f)) != is_permutation_by_values(f)) return show(f);
    return std::nullopt;
  }));

  checks.push_back(run_check("P A^T P inverts A(f) for permutations", n,
                             [&]() -> std::optional<std::string> {
    const auto f = random_permutation_poly(field, rng);
    const Matrix a = build_direct(f);
    const Matrix inv = inverse_via_conjugation(a);
    if (!matmul(a, inv).is_identity()) return show(f);
    const auto finv = column_poly(inv, 1);
    for (std::uint32_t x = 0; x < q; ++x) {
      if (evaluate(finv, evaluate(f, Elem{x})) != Elem{x}) return show(f);
    }
    return std::nullopt;
  }));

  checks.push_back(run_check("matrix order == lcm of cycle lengths", n, [&]() -> std::optional<std::string> {
    const auto f = random_permutation_poly(field, rng);
    std::uint64_t l = 1;
    for (auto len : cycle_decomposition(build_graph(f)).lengths()) l = std::lcm(l, std::uint64_t{len});
    if (matrix_order(f) != l) return show(f);
    return std::nullopt;
  }));

  checks.push_back(run_check("sequence period: graph == iteration", n, [&]() -> std::optional<std::string> {
    const auto f = random_poly(field, rng);
    const Elem seed{static_cast<std::uint32_t>(rng() % q)};
    const auto a = sequence_period(f, seed), b = sequence_period_direct(f, seed);
    if (a.period != b.period || a.preperiod != b.preperiod) {
      return show(f) + " seed=" + std::to_string(seed.value);
    }
    return std::nullopt;
  }));

  std::size_t diag_skipped = 0;
  checks.push_back(run_check("diagonalization eigenbasis", n, [&]() -> std::optional<std::string> {
    const auto f = random_permutation_poly(field, rng);
    try {
      const auto d = diagonalize(f);
      if (!d.diagonalizable || !eigen_residual_check(d)) return show(f);
      if (d.extension.degree == 1) {
        auto roots = roots_with_multiplicity(*field, char_poly(build_direct(f)));
        if (roots != d.eigenvalues()) return show(f) + " (char poly roots)";
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PCharObstruction && e.kind() != ErrorKind::SizeLimit) throw;
      ++diag_skipped;
    }
    return std::nullopt;
  }));
  checks.back().name += " (" + std::to_string(diag_skipped) + " skipped: p | L_i or size cap)";

  checks.push_back(run_check("commuting closed form == pointwise", n, [&]() -> std::optional<std::string> {
    const auto f = (rng() % 4 == 0) ? ReducedPoly::identity(field) : random_poly(field, rng);
    const Elem a{static_cast<std::uint32_t>(rng() % q)};
    const Elem b{static_cast<std::uint32_t>(1 + rng() % (q - 1))};
    if (commutes_with_linear(f, a, b) != commutes_with_linear_pointwise(f, a, b)) {
      return show(f) + " a=" + std::to_string(a.value) + " b=" + std::to_string(b.value);
    }
    return std::nullopt;
  }));

  checks.push_back(run_check("value set lower bound floor((q-1)/d)+1", n,
                             [&]() -> std::optional<std::string> {
    const auto f = random_poly(field, rng);
    const auto d = f.degree();
    if (!d || *d == 0) return std::nullopt;
    const auto r = minimum_value_set_check(f);
    if (!r.lower_bound_holds || r.rank != census_brute(f).size) return show(f);
    return std::nullopt;
  }));

  {
    CheckResult info{"gap bound |V_f| >= L_f + 2 (probe)", true, 0, {}, true};
    std::size_t violations = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto f = random_poly(field, rng);
      const auto probe = das_mullen_bound(f);
      ++info.cases;
      if (!probe.holds) {
        if (violations++ == 0) {
          info.witness = show(f) + " L_f=" + std::to_string(probe.gaps.max_gap) +
                         " |V_f|=" + std::to_string(probe.value_set_size);
        }
      }
    }
    info.name += ": " + std::to_string(violations) + " violations";
    checks.push_back(std::move(info));
  }
  return report;
}

}  // namespace powmat
