#include "hamplane/grinberg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "checked_int.hpp"

namespace hamplane {

namespace {

void validate(const DegreeCounts& counts, const char* what) {
  for (auto [degree, mult] : counts) {
    if (degree < 3) throw std::invalid_argument(std::string(what) + ": degree " + std::to_string(degree) + " < 3");
    if (mult < 0) throw std::invalid_argument(std::string(what) + ": negative multiplicity for degree " +
                                              std::to_string(degree));
  }
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

DegreeCounts face_degrees(const FaceTracing& faces) {
  DegreeCounts out;
  for (const Face& f : faces.faces) ++out[static_cast<std::int64_t>(f.degree())];
  return out;
}

DegreeCounts cycle_sizes(const CycleBasis& basis) {
  DegreeCounts out;
  for (const Cycle& c : basis.cycles) ++out[static_cast<std::int64_t>(c.size())];
  return out;
}

std::int64_t weighted_excess(const DegreeCounts& counts) {
  std::int64_t total = 0;
  for (auto [degree, x] : counts) total = checked_add(total, checked_mul(degree - 2, x));
  return total;
}

GrinbergReport eval_full(const FacePartition& p) {
  validate(p.inside, "inside faces");
  validate(p.outside, "outside faces");
  GrinbergReport r;
  r.lhs_inside = weighted_excess(p.inside);
  r.lhs_full = checked_sub(r.lhs_inside, weighted_excess(p.outside));
  r.rhs_inside = checked_sub(p.n, 2);
  r.satisfied_full = r.lhs_full == 0;
  r.satisfied_inside = r.lhs_inside == r.rhs_inside;
  return r;
}

std::vector<SizeSolution> solve_inside(const DegreeCounts& available, std::int64_t n) {
  validate(available, "available sizes");
  std::vector<std::int64_t> weight, cap, size;
  for (auto [degree, mult] : available) {
    if (mult == 0) continue;
    size.push_back(degree);
    weight.push_back(degree - 2);
    cap.push_back(mult);
  }
  const std::int64_t target = checked_sub(n, 2);
  if (target < 0) return {};
  const std::size_t k = size.size();

  // suffix_max[i]: largest total reachable with sizes i..k-1.
  std::vector<std::int64_t> suffix_max(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) {
    suffix_max[i] = checked_add(suffix_max[i + 1], checked_mul(weight[i], cap[i]));
  }

  // reach[i][t]: sizes i..k-1 can make exactly t. Skipped when the table
  // would be large; the bound above still prunes.
  constexpr std::int64_t kTableLimit = 1 << 25;
  std::vector<std::vector<char>> reach;
  const bool use_table = static_cast<std::int64_t>(k + 1) * (target + 1) <= kTableLimit;
  if (use_table) {
    const std::size_t width = static_cast<std::size_t>(target) + 1;
    reach.assign(k + 1, std::vector<char>(width, 0));
    reach[k][0] = 1;
    for (std::size_t i = k; i-- > 0;) {
      const auto w = static_cast<std::size_t>(weight[i]);
      const std::int64_t a = cap[i];
      for (std::size_t residue = 0; residue < w && residue < width; ++residue) {
        // Sliding window over t = residue + j*w of the last a+1 entries.
        std::int64_t hits = 0;
        std::size_t j = 0;
        for (std::size_t t = residue; t < width; t += w, ++j) {
          hits += reach[i + 1][t];
          if (static_cast<std::int64_t>(j) > a) hits -= reach[i + 1][t - static_cast<std::size_t>(a + 1) * w];
          reach[i][t] = hits > 0;
        }
      }
    }
  }

  std::vector<SizeSolution> out;
  std::vector<std::int64_t> chosen(k, 0);
  std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i, std::int64_t rest) {
    if (rest > suffix_max[i]) return;
    if (use_table && !reach[i][static_cast<std::size_t>(rest)]) return;
    if (i == k) {
      if (rest != 0) return;
      SizeSolution s;
      for (std::size_t q = 0; q < k; ++q) {
        if (chosen[q] > 0) s.counts[size[q]] = chosen[q];
      }
      out.push_back(std::move(s));
      return;
    }
    for (std::int64_t x = std::min(cap[i], rest / weight[i]); x >= 0; --x) {
      chosen[i] = x;
      walk(i + 1, rest - x * weight[i]);
    }
    chosen[i] = 0;
  };
  walk(0, target);
  return out;
}

const char* to_string(GrinbergForm form) { return form == GrinbergForm::full ? "full" : "inside"; }

namespace {

std::vector<std::int64_t> term_residues(GrinbergForm form, std::int64_t degree, std::int64_t mult,
                                        std::int64_t m) {
  const std::int64_t coef = mod(degree - 2, m);
  std::vector<char> hit(static_cast<std::size_t>(m), 0);
  for (std::int64_t x = 0; x <= std::min(mult, m - 1); ++x) {
    const std::int64_t term = form == GrinbergForm::full ? coef * mod(2 * x - mult, m) : coef * x;
    hit[static_cast<std::size_t>(mod(term, m))] = 1;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t r = 0; r < m; ++r) {
    if (hit[static_cast<std::size_t>(r)]) out.push_back(r);
  }
  return out;
}

std::int64_t target_for(GrinbergForm form, std::int64_t n, std::int64_t m) {
  return form == GrinbergForm::full ? 0 : mod(n - 2, m);
}

std::string congruence_text(GrinbergForm form, const DegreeCounts& available, std::int64_t n, std::int64_t m) {
  std::ostringstream os;
  bool first = true;
  for (auto [degree, mult] : available) {
    if (mult == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (form == GrinbergForm::full) {
      os << (degree - 2) << "(2f'_" << degree << " - " << mult << ")";
    } else {
      os << (degree - 2) << "x_" << degree;
    }
  }
  if (first) os << "0";
  os << " == " << (form == GrinbergForm::full ? 0 : n - 2) << " (mod " << m << ")";
  if (form == GrinbergForm::full) {
    os << ", 0 <= f'_i <= a_i";
  } else {
    os << ", 0 <= x_i <= a_i";
  }
  return os.str();
}

}  // namespace

std::optional<ModularCertificate> modular_obstruction(const DegreeCounts& available, std::int64_t n,
                                                      std::span<const std::int64_t> moduli) {
  validate(available, "available sizes");
  for (std::int64_t m : moduli) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2, got " + std::to_string(m));
    for (GrinbergForm form : {GrinbergForm::full, GrinbergForm::inside}) {
      ModularCertificate cert;
      cert.modulus = m;
      cert.form = form;
      cert.n = n;
      cert.target_residue = target_for(form, n, m);
      std::vector<char> totals(static_cast<std::size_t>(m), 0);
      totals[0] = 1;
      for (auto [degree, mult] : available) {
        if (mult == 0) continue;
        ResidueRow row{degree, mult, mod(degree - 2, m), term_residues(form, degree, mult, m)};
        std::vector<char> next(static_cast<std::size_t>(m), 0);
        for (std::int64_t s = 0; s < m; ++s) {
          if (!totals[static_cast<std::size_t>(s)]) continue;
          for (std::int64_t r : row.attainable) next[static_cast<std::size_t>((s + r) % m)] = 1;
        }
        totals = std::move(next);
        cert.rows.push_back(std::move(row));
      }
      if (totals[static_cast<std::size_t>(cert.target_residue)]) continue;
      for (std::int64_t s = 0; s < m; ++s) {
        if (totals[static_cast<std::size_t>(s)]) cert.attainable_totals.push_back(s);
      }
      cert.congruence = congruence_text(form, available, n, m);
      return cert;
    }
  }
  return std::nullopt;
}

bool replay(const ModularCertificate& cert) {
  const std::int64_t m = cert.modulus;
  if (m < 2) return false;
  if (cert.target_residue != target_for(cert.form, cert.n, m)) return false;
  for (const ResidueRow& row : cert.rows) {
    if (row.degree < 3 || row.multiplicity < 0 || row.coefficient != mod(row.degree - 2, m)) return false;
  }
  // Depth-first over every count residue of every row; (row, partial sum)
  // states already explored are skipped.
  const std::size_t rows = cert.rows.size();
  std::vector<std::vector<char>> visited(rows + 1, std::vector<char>(static_cast<std::size_t>(m), 0));
  std::function<bool(std::size_t, std::int64_t)> satisfiable = [&](std::size_t i, std::int64_t partial) {
    if (i == rows) return partial == cert.target_residue;
    auto& seen = visited[i][static_cast<std::size_t>(partial)];
    if (seen) return false;
    seen = 1;
    const ResidueRow& row = cert.rows[i];
    for (std::int64_t x = 0; x <= std::min(row.multiplicity, m - 1); ++x) {
      const std::int64_t coef = mod(row.degree - 2, m);
      const std::int64_t term = cert.form == GrinbergForm::full ? coef * mod(2 * x - row.multiplicity, m)
                                                                : coef * x;
      if (satisfiable(i + 1, mod(partial + mod(term, m), m))) return true;
    }
    return false;
  };
  return !satisfiable(0, 0);
}

}  // namespace hamplane
