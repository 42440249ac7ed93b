#include "heegaard/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "heegaard/errors.hpp"

namespace heegaard {

IntMatrix relator_matrix(const HeegaardGraph& graph) {
  const auto g = static_cast<std::size_t>(graph.genus);
  IntMatrix r(g, g);
  for (const auto& e : graph.edges) {
    const auto i = static_cast<std::size_t>(e.head.vertex.handle - 1);
    const auto j = static_cast<std::size_t>(e.color - 1);
    r(i, j) += e.head.vertex.side == Side::Plus ? 1 : -1;
  }
  return r;
}

std::vector<Int> link_class(const HeegaardGraph& graph, const LinkDiagram& diagram) {
  std::vector<Int> l(static_cast<std::size_t>(graph.genus), 0);
  for (const auto& s : diagram.strands) {
    l[static_cast<std::size_t>(s.end.vertex.handle - 1)] += s.end.vertex.side == Side::Plus ? 1 : -1;
  }
  return l;
}

bool certify_homology_sphere(const IntMatrix& relators) {
  if (relators.rows() != relators.cols()) throw std::invalid_argument("relator matrix must be square");
  return std::abs(determinant(relators)) == 1;
}

namespace {

// Smallest |x|_1 over x0 + span_Z(kernel), by enumeration in a box that
// provably contains the optimum.
std::vector<Int> minimise_l1(std::vector<Int> x0, const std::vector<std::vector<Int>>& kernel) {
  const std::size_t n = x0.size(), k = kernel.size();
  Int budget = 0;
  for (Int v : x0) budget = checked_add(budget, std::abs(v));
  if (budget == 0) return x0;

  // Pick k rows on which the kernel basis is invertible.
  std::vector<std::size_t> rows(k);
  Int det = 0;
  IntMatrix sub(k, k);
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::size_t at = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (mask[r]) rows[at++] = r;
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) sub(a, b) = kernel[b][rows[a]];
    }
    det = determinant(sub);
  } while (det == 0 && std::prev_permutation(mask.begin(), mask.end()));
  if (det == 0) throw std::logic_error("kernel basis is rank deficient");

  // |t_i| <= max_s |adj(sub)_is| * 2|x0|_1 / |det|.
  std::vector<Int> bound(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    Int worst = 0;
    for (std::size_t s = 0; s < k; ++s) {
      IntMatrix minor(k - 1, k - 1);
      for (std::size_t a = 0, ma = 0; a < k; ++a) {
        if (a == s) continue;
        for (std::size_t b = 0, mb = 0; b < k; ++b) {
          if (b == i) continue;
          minor(ma, mb++) = sub(a, b);
        }
        ++ma;
      }
      worst = std::max(worst, std::abs(determinant(minor)));
    }
    bound[i] = checked_mul(worst, checked_mul(2, budget)) / std::abs(det);
  }
  double volume = 1;
  for (Int b : bound) volume *= static_cast<double>(2 * b + 1);
  if (volume > 5e6) throw Error("solution space too large to minimise exactly");

  std::vector<Int> best = x0;
  Int best_norm = budget;
  std::vector<Int> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = -bound[i];
  while (true) {
    std::vector<Int> x = x0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t r = 0; r < n; ++r) x[r] = checked_add(x[r], checked_mul(t[i], kernel[i][r]));
    }
    Int norm = 0;
    for (Int v : x) norm = checked_add(norm, std::abs(v));
    if (norm < best_norm || (norm == best_norm && x < best)) best = x, best_norm = norm;
    std::size_t i = 0;
    while (i < k && t[i] == bound[i]) t[i] = -bound[i], ++i;
    if (i == k) break;
    ++t[i];
  }
  return best;
}

}  // namespace

std::vector<Int> solve_extension_coefficients(const IntMatrix& relators, std::span<const Int> link) {
  if (relators.rows() != relators.cols()) throw std::invalid_argument("relator matrix must be square");
  if (link.size() != relators.rows()) throw std::invalid_argument("link class has the wrong length");
  const std::size_t n = relators.cols();
  const SmithForm snf = smith_normal_form(relators);
  const std::vector<Int> c = snf.left * link;  // D y = U l, x = V y

  std::vector<Int> y(n, 0);
  std::vector<std::vector<Int>> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    const Int d = snf.diagonal[i];
    if (d == 0) {
      if (c[i] != 0) throw NoIntegralSolution("link class is not in the relator lattice");
      kernel.push_back(snf.right.column(i));
    } else {
      if (c[i] % d != 0) throw NoIntegralSolution("link class is not in the relator lattice");
      y[i] = c[i] / d;
    }
  }
  std::vector<Int> x = snf.right * std::span<const Int>(y);
  if (!kernel.empty()) x = minimise_l1(std::move(x), kernel);
  return x;
}

HomologyPresentation homology_presentation(const HeegaardGraph& graph) {
  HomologyPresentation p;
  p.generators = graph.genus;
  p.relators = relator_matrix(graph);
  p.determinant = determinant(p.relators);
  p.invariant_factors = smith_normal_form(p.relators).diagonal;
  p.is_zhs = std::abs(p.determinant) == 1;
  return p;
}

std::string relator_text(const IntMatrix& relators, std::size_t column) {
  std::string out;
  for (std::size_t i = 0; i < relators.rows(); ++i) {
    const Int v = relators(i, column);
    if (v == 0) continue;
    if (v < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (std::abs(v) != 1) out += std::to_string(std::abs(v));
    out += "A" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

std::string presentation_text(const HomologyPresentation& p) {
  std::string out = "⟨";
  for (int i = 1; i <= p.generators; ++i) out += (i > 1 ? ", A" : "A") + std::to_string(i);
  out += " | ";
  for (std::size_t j = 0; j < p.relators.cols(); ++j) out += (j ? ", " : "") + relator_text(p.relators, j);
  out += "⟩";
  return out;
}

}  // namespace heegaard
