#include "modfun/en_complex.hpp"

#include <map>

#include "modfun/errors.hpp"
#include "modfun/fl_functor.hpp"
#include "modfun/kernels.hpp"

namespace modfun {

std::string ENBasisElement::label(std::size_t component) const {
  auto join = [](const std::vector<std::size_t>& v, const char* prefix, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += sep;
      s += prefix + std::to_string(v[k] + 1);
    }
    return s;
  };
  if (component == 0) return join(subset, "g", "");
  if (component == 1) return join(subset, "f", "");
  std::string s = join(subset, "f", "^");
  if (!multiset.empty()) s += " (x) (" + join(multiset, "g", "") + ")*";
  return s;
}

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    // Colex successor: bump the first entry that can move up.
    std::size_t i = 0;
    while (i < k && (i + 1 < k ? s[i] + 1 == s[i + 1] : s[i] + 1 == n)) ++i;
    if (i == k) break;
    ++s[i];
    for (std::size_t j = 0; j < i; ++j) s[j] = j;
  }
  return out;
}

std::vector<std::vector<std::size_t>> lex_multisets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> s(k, 0);
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[i - 1];
  }
  return out;
}

namespace {

std::size_t choose(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t en_rank(std::size_t g, std::size_t f, std::size_t i) {
  if (i == 0) return g;
  if (i == 1) return f;
  return choose(f, g + i - 1) * choose(g + i - 3, g - 1);
}

ENComplex build_en(const PolyMatrix& phi) {
  const std::size_t g = phi.rows(), f = phi.cols();
  if (g == 0) throw InputError("Eagon-Northcott complex needs g >= 1");
  if (f < g) throw InputError("Eagon-Northcott complex needs f >= g");
  const std::size_t nvars = phi.nvars();
  const std::size_t k = f - g + 1;

  ENComplex c;
  c.g = g;
  c.f = f;
  c.phi = phi;
  c.complex.nvars = nvars;
  c.bases.resize(k + 1);
  for (std::size_t i = 0; i < g; ++i) c.bases[0].push_back({{i}, {}});
  for (std::size_t j = 0; j < f; ++j) c.bases[1].push_back({{j}, {}});
  for (std::size_t i = 2; i <= k; ++i) {
    for (const auto& s : colex_subsets(f, g + i - 1)) {
      for (const auto& m : lex_multisets(g, i - 2)) c.bases[i].push_back({s, m});
    }
  }
  for (std::size_t i = 0; i <= k; ++i) {
    const int deg = i == 0 ? 0 : i == 1 ? 1 : static_cast<int>(g + i - 1);
    c.complex.degrees.emplace_back(c.bases[i].size(), deg);
  }

  c.complex.differentials.push_back(phi);
  if (k >= 2) {
    // d_2(f_J) = sum_k (-1)^k M_{J minus j_k} f_{j_k}.
    PolyMatrix d(f, c.bases[2].size(), nvars);
    for (std::size_t col = 0; col < c.bases[2].size(); ++col) {
      const auto& J = c.bases[2][col].subset;
      for (std::size_t pos = 0; pos < J.size(); ++pos) {
        PolyMatrix minor(g, g, nvars);
        std::size_t mc = 0;
        for (std::size_t q = 0; q < J.size(); ++q) {
          if (q == pos) continue;
          for (std::size_t r = 0; r < g; ++r) minor(r, mc) = phi(r, J[q]);
          ++mc;
        }
        Polynomial m = determinant(minor);
        d(J[pos], col) = pos % 2 == 0 ? m : -m;
      }
    }
    c.complex.differentials.push_back(std::move(d));
  }
  for (std::size_t i = 3; i <= k; ++i) {
    std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, std::size_t> row_of;
    for (std::size_t r = 0; r < c.bases[i - 1].size(); ++r) {
      row_of[{c.bases[i - 1][r].subset, c.bases[i - 1][r].multiset}] = r;
    }
    PolyMatrix d(c.bases[i - 1].size(), c.bases[i].size(), nvars);
    for (std::size_t col = 0; col < c.bases[i].size(); ++col) {
      const auto& [J, I] = c.bases[i][col];
      for (std::size_t pos = 0; pos < J.size(); ++pos) {
        std::vector<std::size_t> J2 = J;
        J2.erase(J2.begin() + static_cast<std::ptrdiff_t>(pos));
        for (std::size_t kp = 0; kp < I.size(); ++kp) {
          std::vector<std::size_t> I2 = I;
          I2.erase(I2.begin() + static_cast<std::ptrdiff_t>(kp));
          const std::size_t row = row_of.at({J2, I2});
          const Polynomial& entry = phi(I[kp], J[pos]);
          if (pos % 2 == 0) d(row, col) += entry;
          else d(row, col) -= entry;
        }
      }
    }
    c.complex.differentials.push_back(std::move(d));
  }
  return c;
}

ComplexCheck verify_complex(const ENComplex& c) {
  const auto& ds = c.complex.differentials;
  for (std::size_t i = 0; i + 1 < ds.size(); ++i) {
    const PolyMatrix prod = matmul(ds[i], ds[i + 1]);
    for (std::size_t r = 0; r < prod.rows(); ++r) {
      for (std::size_t col = 0; col < prod.cols(); ++col) {
        if (!prod(r, col).is_zero()) return {false, static_cast<int>(i + 1), r, col};
      }
    }
  }
  return {};
}

BettiTable complex_betti(const FreeComplex& c) {
  BettiTable b;
  for (std::size_t i = 0; i < c.degrees.size(); ++i) {
    for (int d : c.degrees[i]) ++b[{static_cast<int>(i), d}];
  }
  return b;
}

ENComparison en_matches_resolution(int n, int l) {
  if (n < 1 || l < 1) throw InputError("n and l must be positive");
  if (n * l > 6) throw GuardError("EN comparison needs n l <= 6");
  const FinDimAlgebra a = fixtures::matrix_algebra(static_cast<std::size_t>(n));
  const GradedPresentation p =
      build_presentation(a, fixtures::standard_module(a, static_cast<std::size_t>(n)), static_cast<std::size_t>(l));
  const ENComplex en = build_en(p.relations);
  ENComparison out;
  out.en = complex_betti(en.complex);
  out.resolution = betti_table(minimal_resolution(p.quotient()));
  bool all = true;
  for (std::size_t i = 1; i <= en.length(); ++i) {
    out.homology_zero.push_back(homology_is_zero(en.complex, i));
    all = all && out.homology_zero.back();
  }
  out.match = all && out.en == out.resolution && verify_complex(en).ok;
  return out;
}

}  // namespace modfun
