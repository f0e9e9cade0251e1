#include "heisym/connection.hpp"

#include "heisym/polynomial.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace heisym {

ConnectionMap::ConnectionMap(ReductiveSplit s, std::vector<Matrix> lambda_maps)
    : split(std::move(s)), maps(std::move(lambda_maps)) {
  if (maps.size() != split.m_dim())
    throw std::invalid_argument("one endomorphism per m basis vector required");
  for (const auto& m : maps)
    if (m.rows() != split.m_dim() || m.cols() != split.m_dim())
      throw std::invalid_argument("endomorphism size mismatch");
}

Matrix ConnectionMap::lambda_of(const Vec& m_coords) const {
  if (m_coords.size() != split.m_dim())
    throw std::invalid_argument("m coordinate length mismatch");
  Matrix acc = Matrix::zero(split.m_dim(), split.m_dim());
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (m_coords[i] != 0) acc = acc + maps[i] * m_coords[i];
  return acc;
}

Matrix isotropy_rep(const ReductiveSplit& split, const Vec& z_ambient) {
  if (!split.h().contains(z_ambient))
    throw std::invalid_argument("isotropy_rep: vector is not in h");
  const std::size_t m = split.m_dim();
  Matrix rep(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec img = split.m_coords_of_projection(
        split.algebra().bracket(z_ambient, split.m_basis().row(j)));
    for (std::size_t i = 0; i < m; ++i) rep(i, j) = img[i];
  }
  return rep;
}

std::vector<std::string> equivariance_check(const ConnectionMap& c) {
  std::vector<std::string> violations;
  const ReductiveSplit& split = c.split;
  for (std::size_t zi = 0; zi < split.h().dim(); ++zi) {
    Vec z = split.h().basis().row(zi);
    Matrix lam_z = isotropy_rep(split, z);
    for (std::size_t xi = 0; xi < split.m_dim(); ++xi) {
      // [X, Z] lies in m by reductivity.
      Vec bracket_m = split.m_coords(split.algebra().bracket(split.m_basis().row(xi), z));
      Matrix lhs = c.lambda_of(bracket_m);
      Matrix rhs = c.maps[xi] * lam_z - lam_z * c.maps[xi];
      if (lhs != rhs) {
        std::ostringstream out;
        out << "Lambda[Y" << xi + 1 << ",Z" << zi + 1 << "] != [Lambda(Y" << xi + 1
            << "), lambda(Z" << zi + 1 << ")]";
        violations.push_back(out.str());
      }
    }
  }
  return violations;
}

bool TorsionTensor::is_zero() const {
  for (const auto& row : values)
    for (const auto& v : row)
      if (!is_zero_vec(v)) return false;
  return true;
}

std::string TorsionTensor::first_nonzero() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values[i].size(); ++j)
      if (!is_zero_vec(values[i][j])) {
        std::ostringstream out;
        out << "T(Y" << i + 1 << ",Y" << j + 1 << ") = " << vec_to_string(values[i][j]);
        return out.str();
      }
  return "";
}

bool CurvatureTensor::is_zero() const {
  for (const auto& row : values)
    for (const auto& m : row)
      if (!m.is_zero()) return false;
  return true;
}

std::string CurvatureTensor::first_nonzero() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values[i].size(); ++j)
      if (!values[i][j].is_zero()) {
        std::ostringstream out;
        out << "R(Y" << i + 1 << ",Y" << j + 1 << ") = " << values[i][j].to_string();
        return out.str();
      }
  return "";
}

TorsionTensor torsion(const ConnectionMap& c) {
  const std::size_t m = c.split.m_dim();
  TorsionTensor t;
  t.values.assign(m, std::vector<Vec>(m, zero_vec(m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec bracket_m = c.split.m_coords_of_projection(
          c.split.algebra().bracket(c.split.m_basis().row(i), c.split.m_basis().row(j)));
      Vec value = sub(sub(c.maps[i].col(j), c.maps[j].col(i)), bracket_m);
      t.values[i][j] = std::move(value);
    }
  return t;
}

CurvatureTensor curvature(const ConnectionMap& c) {
  const std::size_t m = c.split.m_dim();
  CurvatureTensor r;
  r.values.assign(m, std::vector<Matrix>(m, Matrix::zero(m, m)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec bracket = c.split.algebra().bracket(c.split.m_basis().row(i),
                                              c.split.m_basis().row(j));
      Vec bracket_m = c.split.m_coords_of_projection(bracket);
      Vec bracket_h = sub(bracket, c.split.ambient_from_m(bracket_m));
      Matrix value = c.maps[i] * c.maps[j] - c.maps[j] * c.maps[i] -
                     c.lambda_of(bracket_m) - isotropy_rep(c.split, bracket_h);
      r.values[i][j] = std::move(value);
    }
  return r;
}

ConnectionMap first_canonical(const ReductiveSplit& split) {
  std::vector<Matrix> maps(split.m_dim(), Matrix::zero(split.m_dim(), split.m_dim()));
  return ConnectionMap(split, std::move(maps));
}

ConnectionMap second_canonical(const ReductiveSplit& split) {
  const std::size_t m = split.m_dim();
  std::vector<Matrix> maps(m, Matrix::zero(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec half = scale(Rational(1, 2),
                       split.m_coords_of_projection(split.algebra().bracket(
                           split.m_basis().row(i), split.m_basis().row(j))));
      for (std::size_t t = 0; t < m; ++t) maps[i](t, j) = half[t];
    }
  return ConnectionMap(split, std::move(maps));
}

bool is_adapted(const ConnectionMap& c, const Grading& g) {
  ReductiveSplit expected = reductive_split(g);
  if (!(c.split == expected)) throw std::invalid_argument("is_adapted: split mismatch");
  for (unsigned a = 1; a < g.component_count(); ++a)
    for (unsigned b = 1; b < g.component_count(); ++b) {
      const Subspace& ga = g.component(a);
      const Subspace& gb = g.component(b);
      const Subspace& target = g.component(a ^ b);
      for (std::size_t i = 0; i < ga.dim(); ++i) {
        Matrix lam = c.lambda_of(c.split.m_coords(ga.basis().row(i)));
        for (std::size_t j = 0; j < gb.dim(); ++j) {
          Vec img_m = lam.apply(c.split.m_coords(gb.basis().row(j)));
          if (!target.contains(c.split.ambient_from_m(img_m))) return false;
        }
      }
    }
  return true;
}

bool is_homogeneous(const ConnectionMap& c, const Grading& g) {
  ReductiveSplit expected = reductive_split(g);
  if (!(c.split == expected)) throw std::invalid_argument("is_homogeneous: split mismatch");
  for (const auto& lam : c.maps)
    for (unsigned b = 1; b < g.component_count(); ++b) {
      const Subspace& gb = g.component(b);
      for (std::size_t j = 0; j < gb.dim(); ++j) {
        Vec img_m = lam.apply(c.split.m_coords(gb.basis().row(j)));
        if (!gb.contains(c.split.ambient_from_m(img_m))) return false;
      }
    }
  return true;
}

ConnectionMap heisenberg_flat_family(std::size_t p, const RationalGrid& C) {
  if (p == 0) throw std::invalid_argument("heisenberg_flat_family needs p >= 1");
  if (C.size() != p) throw std::invalid_argument("C grid must be p x p");
  for (const auto& row : C)
    if (row.size() != p) throw std::invalid_argument("C grid must be p x p");

  Grading g = heisenberg_grading(HeisenbergGradingName::Z22, p);
  ReductiveSplit split = reductive_split(g);
  const std::size_t n = 2 * p + 1;
  const std::size_t m = split.m_dim();  // == n, h is trivial

  // Ambient-level values of Lambda(e_gi)(e_gj).
  auto ambient_value = [&](std::size_t gi, std::size_t gj) -> Vec {
    Vec v = zero_vec(n);
    if (gi < 2 * p && gj < 2 * p && gi % 2 == 0 && gj % 2 == 1) {
      std::size_t k = gi / 2, s = (gj + 1) / 2;        // odd acting on even
      v[n - 1] = C[k][s - 1];
    } else if (gi < 2 * p && gj < 2 * p && gi % 2 == 1 && gj % 2 == 0) {
      std::size_t s = (gi + 1) / 2, k = gj / 2;        // even acting on odd
      v[n - 1] = (k == s - 1) ? C[s - 1][s - 1] - 1 : C[k][s - 1];
    }
    return v;  // everything else, including Lambda(center), is zero
  };

  // Transport to m-coordinates along the split's basis ordering.
  std::vector<std::size_t> ambient_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    Vec row = split.m_basis().row(i);
    std::size_t idx = 0;
    while (row[idx] == 0) ++idx;
    ambient_of[i] = idx;
  }
  std::vector<Matrix> maps(m, Matrix::zero(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec img = split.m_coords(ambient_value(ambient_of[i], ambient_of[j]));
      for (std::size_t t = 0; t < m; ++t) maps[i](t, j) = img[t];
    }
  return ConnectionMap(split, std::move(maps));
}

namespace {

struct SlotLayout {
  // Unknown index of the coefficient of Y_t inside Lambda(Y_i)(Y_j);
  // -1 when the pattern forces the entry to zero.
  std::vector<std::vector<std::vector<long>>> slot;
  std::size_t count = 0;

  SlotLayout(const ReductiveSplit& split, LambdaPattern pattern) {
    const std::size_t m = split.m_dim();
    slot.assign(m, std::vector<std::vector<long>>(m, std::vector<long>(m, -1)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t t = 0; t < m; ++t) {
          bool allowed = pattern == LambdaPattern::Full ||
                         split.m_labels()[t] ==
                             (split.m_labels()[i] ^ split.m_labels()[j]);
          if (allowed) slot[i][j][t] = static_cast<long>(count++);
        }
  }
};

ConnectionMap connection_from_values(const ReductiveSplit& split, const SlotLayout& layout,
                                     const Vec& values) {
  const std::size_t m = split.m_dim();
  std::vector<Matrix> maps(m, Matrix::zero(m, m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < m; ++t)
        if (layout.slot[i][j][t] >= 0)
          maps[i](t, j) = values[static_cast<std::size_t>(layout.slot[i][j][t])];
  return ConnectionMap(split, std::move(maps));
}

Vec flatten_maps(const ConnectionMap& c) {
  const std::size_t m = c.split.m_dim();
  Vec flat;
  flat.reserve(m * m * m);
  for (const auto& mat : c.maps)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t col = 0; col < m; ++col) flat.push_back(mat(r, col));
  return flat;
}

}  // namespace

ConnectionMap ConnectionSpace::member(const Vec& coeffs) const {
  if (coeffs.size() != homogeneous_basis.size())
    throw std::invalid_argument("coefficient count mismatch");
  std::vector<Matrix> maps = particular.maps;
  for (std::size_t b = 0; b < coeffs.size(); ++b)
    for (std::size_t i = 0; i < maps.size(); ++i)
      maps[i] = maps[i] + homogeneous_basis[b].maps[i] * coeffs[b];
  return ConnectionMap(particular.split, std::move(maps));
}

bool ConnectionSpace::contains(const ConnectionMap& c) const {
  if (!(c.split == particular.split)) return false;
  Vec target = sub(flatten_maps(c), flatten_maps(particular));
  if (homogeneous_basis.empty()) return is_zero_vec(target);
  std::vector<Vec> columns;
  for (const auto& b : homogeneous_basis) columns.push_back(flatten_maps(b));
  Matrix a = Matrix::from_rows(columns, target.size()).transpose();
  return solve_affine(a, target).has_value();
}

ConnectionSpace torsion_free_adapted_space(const Grading& g, LambdaPattern pattern) {
  ReductiveSplit split = reductive_split(g);
  const std::size_t m = split.m_dim();
  SlotLayout layout(split, pattern);

  // T(Y_i,Y_j)_t = 0, as an affine system over the slots.
  std::vector<Vec> rows;
  Vec rhs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec bracket_m = split.m_coords_of_projection(
          split.algebra().bracket(split.m_basis().row(i), split.m_basis().row(j)));
      for (std::size_t t = 0; t < m; ++t) {
        Vec row = zero_vec(layout.count);
        if (layout.slot[i][j][t] >= 0) row[layout.slot[i][j][t]] += 1;
        if (layout.slot[j][i][t] >= 0) row[layout.slot[j][i][t]] -= 1;
        if (is_zero_vec(row) && bracket_m[t] == 0) continue;
        rows.push_back(std::move(row));
        rhs.push_back(bracket_m[t]);
      }
    }

  auto solution = rows.empty()
                      ? std::optional<AffineSolution>(AffineSolution{
                            zero_vec(layout.count), Subspace::full(layout.count)})
                      : solve_affine(Matrix::from_rows(rows, layout.count), rhs);
  if (!solution)
    throw std::runtime_error("torsion-free system is inconsistent");  // cannot happen

  ConnectionSpace space{connection_from_values(split, layout, solution->particular), {}};
  for (std::size_t r = 0; r < solution->homogeneous.dim(); ++r)
    space.homogeneous_basis.push_back(
        connection_from_values(split, layout, solution->homogeneous.basis().row(r)));
  return space;
}

namespace {

// --- exact branch elimination for the p = 1 quadratic system ---

struct BranchState {
  std::map<std::size_t, Rational> assignment;
};

void solve_branches(std::vector<Poly> eqs, BranchState state,
                    const std::vector<std::string>& names,
                    std::vector<BranchState>& components, std::vector<std::string>& log,
                    bool& complete, std::string indent) {
  // Drop zero equations; a nonzero constant closes the branch.
  std::vector<Poly> live;
  for (auto& e : eqs) {
    auto c = e.constant_value();
    if (c && *c != 0) {
      log.push_back(indent + "contradiction: " + rational_to_string(*c) + " = 0");
      return;
    }
    if (!e.is_zero()) live.push_back(std::move(e));
  }
  if (live.empty()) {
    std::ostringstream out;
    out << indent << "solution component:";
    for (const auto& [v, val] : state.assignment)
      out << " " << names[v] << "=" << rational_to_string(val);
    if (state.assignment.empty()) out << " (no constraints)";
    log.push_back(out.str());
    components.push_back(std::move(state));
    return;
  }

  const Poly& eq = live.front();
  auto gcd = eq.monomial_gcd();
  Poly cofactor = eq.shift_down(gcd);

  struct Option {
    std::size_t var;
    Rational value;
    std::string text;
  };
  std::vector<Option> options;
  for (std::size_t v = 0; v < names.size(); ++v)
    if (gcd[v] > 0) options.push_back({v, 0, names[v] + " = 0"});
  if (auto lin = cofactor.linear_root()) {
    options.push_back({lin->first, lin->second,
                       names[lin->first] + " = " + rational_to_string(lin->second)});
  } else if (!cofactor.is_constant()) {
    log.push_back(indent + "cannot factor " + cofactor.to_string(names));
    complete = false;
    return;
  }
  if (options.empty()) {
    // Constant nonzero cofactor with trivial monomial: already handled above.
    log.push_back(indent + "unexpected equation shape: " + eq.to_string(names));
    complete = false;
    return;
  }

  log.push_back(indent + "branching on " + eq.to_string(names));
  for (const auto& opt : options) {
    log.push_back(indent + "  case " + opt.text);
    std::vector<Poly> next;
    next.reserve(live.size());
    for (const auto& e : live) next.push_back(e.substitute(opt.var, opt.value));
    BranchState next_state = state;
    next_state.assignment[opt.var] = opt.value;
    solve_branches(std::move(next), std::move(next_state), names, components, log, complete,
                   indent + "    ");
  }
}

}  // namespace

FlatEnumerationReport h3_flat_enumeration() {
  Grading g = heisenberg_grading(HeisenbergGradingName::Z22, 1);
  ReductiveSplit split = reductive_split(g);
  const std::size_t m = 3;

  // Adapted pattern at p = 1: six scalar unknowns, one per allowed slot.
  SlotLayout layout(split, LambdaPattern::Adapted);
  std::vector<std::string> names(layout.count);
  std::vector<bool> is_center_slot(layout.count, false);
  const std::size_t center = 2;  // m-index of the central basis vector
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < m; ++t)
        if (layout.slot[i][j][t] >= 0) {
          std::size_t v = static_cast<std::size_t>(layout.slot[i][j][t]);
          std::ostringstream nm;
          nm << "L" << i + 1 << j + 1;
          names[v] = nm.str();
          if (i == center || j == center) is_center_slot[v] = true;
        }

  auto var = [&](std::size_t i, std::size_t j, std::size_t t) {
    long s = layout.slot[i][j][t];
    return s < 0 ? Poly(layout.count) : Poly::variable(layout.count, s);
  };

  // Lambda matrices with polynomial entries.
  std::vector<std::vector<std::vector<Poly>>> lam(
      m, std::vector<std::vector<Poly>>(m, std::vector<Poly>(m, Poly(layout.count))));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t j = 0; j < m; ++j) lam[i][t][j] = var(i, j, t);

  auto bracket_m = [&](std::size_t i, std::size_t j) {
    return split.m_coords_of_projection(
        split.algebra().bracket(split.m_basis().row(i), split.m_basis().row(j)));
  };

  // Torsion: linear equations.
  std::vector<Poly> torsion_eqs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vec br = bracket_m(i, j);
      for (std::size_t t = 0; t < m; ++t) {
        Poly e = var(i, j, t) - var(j, i, t) - Poly::constant(layout.count, br[t]);
        if (!e.is_zero()) torsion_eqs.push_back(e);
      }
    }

  // Curvature: h = {0}, so R(Y_i,Y_j) = Lambda_i Lambda_j - Lambda_j Lambda_i
  // - Lambda([Y_i,Y_j]_m), with the last term extended linearly.
  auto curvature_entry = [&](std::size_t i, std::size_t j, std::size_t r, std::size_t c) {
    Poly e(layout.count);
    for (std::size_t k = 0; k < m; ++k)
      e = e + lam[i][r][k] * lam[j][k][c] - lam[j][r][k] * lam[i][k][c];
    Vec br = bracket_m(i, j);
    for (std::size_t k = 0; k < m; ++k)
      if (br[k] != 0) e = e - lam[k][r][c] * br[k];
    return e;
  };
  std::vector<Poly> curvature_eqs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          Poly e = curvature_entry(i, j, r, c);
          if (!e.is_zero()) curvature_eqs.push_back(e);
        }

  FlatEnumerationReport report;

  // Eliminate the linear torsion equations by substitution.
  std::vector<std::pair<std::size_t, Poly>> substitutions;
  std::vector<Poly> pending = torsion_eqs;
  while (true) {
    bool progress = false;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      if (it->is_zero()) {
        pending.erase(it);
        progress = true;
        break;
      }
      if (it->total_degree() != 1) continue;
      // Solve for the first variable appearing linearly.
      std::size_t chosen = layout.count;
      for (std::size_t v = 0; v < layout.count && chosen == layout.count; ++v)
        if (it->degree_in(v) == 1) chosen = v;
      if (chosen == layout.count) continue;
      Poly coeff_part = it->substitute(chosen, Rational(1)) - it->substitute(chosen, Rational(0));
      auto coeff = coeff_part.constant_value();
      if (!coeff || *coeff == 0) continue;  // variable occurs nonlinearly elsewhere
      Poly rest = it->substitute(chosen, Rational(0));
      Poly replacement = rest * (Rational(-1) / *coeff);
      pending.erase(it);
      for (auto& e : pending) e = e.substitute(chosen, replacement);
      for (auto& [v, rep] : substitutions) rep = rep.substitute(chosen, replacement);
      for (auto& e : curvature_eqs) e = e.substitute(chosen, replacement);
      substitutions.emplace_back(chosen, replacement);
      progress = true;
      break;
    }
    if (!progress) break;
  }
  if (!pending.empty())
    throw std::runtime_error("torsion elimination left unresolved equations");

  // Symbolic check that the family (all center slots zero) is flat.
  {
    std::vector<Poly> family_eqs = curvature_eqs;
    for (std::size_t v = 0; v < layout.count; ++v)
      if (is_center_slot[v])
        for (auto& e : family_eqs) e = e.substitute(v, Rational(0));
    report.family_is_flat = true;
    for (const auto& e : family_eqs) report.family_is_flat = report.family_is_flat && e.is_zero();
  }

  // Branch elimination of the remaining quadratic system.
  std::vector<BranchState> components;
  bool complete = true;
  std::vector<Poly> live;
  for (const auto& e : curvature_eqs)
    if (!e.is_zero()) live.push_back(e);
  solve_branches(live, BranchState{}, names, components, report.branch_log, complete, "");

  // Every solution component must kill the center slots, both the directly
  // assigned variables and those eliminated through the torsion system.
  bool all_forced = complete && !components.empty();
  for (const auto& comp : components) {
    for (std::size_t v = 0; v < layout.count; ++v) {
      if (!is_center_slot[v]) continue;
      Poly value = Poly::variable(layout.count, v);
      for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it)
        value = value.substitute(it->first, it->second);
      for (const auto& [av, aval] : comp.assignment) value = value.substitute(av, aval);
      // Free leftover variables may remain; the value must be identically 0.
      if (!value.is_zero()) all_forced = false;
    }
  }
  report.family_is_everything = all_forced;

  std::ostringstream family;
  family << "L12 free, L21 = L12 - 1, all maps touching the center vanish";
  report.family_description = family.str();
  return report;
}

// --- the filiform example ---

ConnectionMap L5Family::reference(const std::array<Rational, 6>& p, const ReductiveSplit& split) {
  const auto& [a, b, c, d, e, f] = p;
  Matrix l1{{a, 0, 0}, {b, 0, 0}, {c, d, a / 2}};
  Matrix l2{{0, 0, 0}, {0, e, 0}, {d, f, a / 2}};
  Matrix l4{{0, 0, 0}, {0, 0, 0}, {-a / 2, 0, 0}};
  return ConnectionMap(split, {l1, l2, l4});
}

ConnectionMap L5Family::corrected(const std::array<Rational, 6>& p,
                                  const ReductiveSplit& split) {
  const auto& [a, b, c, d, e, f] = p;
  Matrix l1{{a, 0, 0}, {b, 0, 0}, {c, d, a / 2}};
  Matrix l2{{0, 0, 0}, {0, e, 0}, {d, f, 0}};
  Matrix l4{{0, 0, 0}, {0, 0, 0}, {a / 2, 0, 0}};
  return ConnectionMap(split, {l1, l2, l4});
}

L5Report l5_scenario(const std::vector<std::array<Rational, 6>>& samples) {
  LieAlgebra l5 = filiform_l5();
  const std::size_t n = 5;
  Subspace h = Subspace::span(n, {unit_vec(n, 2), unit_vec(n, 4)});
  Subspace m = Subspace::span(n, {unit_vec(n, 0), unit_vec(n, 1), unit_vec(n, 3)});
  Grading grading(l5, 1, {h, m});
  ReductiveSplit split = reductive_split(grading);

  L5Report report{split, false, false, {}};

  // The bracket convention sends X1 to -X4 under lambda(X3); the reference
  // matrix has +1 there.
  Matrix lam_x3 = isotropy_rep(split, unit_vec(n, 2));
  Matrix reference_lam{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}};
  report.reference_isotropy_sign_flipped = lam_x3 == -reference_lam;

  // Torsion and equivariance are affine in the six parameters, so vanishing
  // at zero and at each unit tuple proves vanishing identically.
  std::vector<std::array<Rational, 6>> probes{{0, 0, 0, 0, 0, 0}};
  for (std::size_t i = 0; i < 6; ++i) {
    std::array<Rational, 6> e{0, 0, 0, 0, 0, 0};
    e[i] = 1;
    probes.push_back(e);
  }
  report.corrected_family_solves_linear_system = true;
  for (const auto& p : probes) {
    ConnectionMap c = L5Family::corrected(p, split);
    report.corrected_family_solves_linear_system =
        report.corrected_family_solves_linear_system && torsion(c).is_zero() &&
        equivariance_check(c).empty();
  }

  // Curvature vanishes on the sublocus a = e = 0, b f = 1.
  ConnectionMap flat_member = L5Family::corrected({0, 1, 0, 0, 0, 1}, split);
  report.flat_member_verified = equivariance_check(flat_member).empty() &&
                                torsion(flat_member).is_zero() &&
                                curvature(flat_member).is_zero();

  for (const auto& p : samples) {
    L5SampleResult r;
    r.params = p;
    ConnectionMap reference = L5Family::reference(p, split);
    ConnectionMap corrected = L5Family::corrected(p, split);
    r.reference_equivariant = equivariance_check(reference).empty();
    r.reference_torsion_free = torsion(reference).is_zero();
    r.corrected_equivariant = equivariance_check(corrected).empty();
    r.corrected_torsion_free = torsion(corrected).is_zero();
    CurvatureTensor rp = curvature(reference);
    CurvatureTensor rc = curvature(corrected);
    r.reference_curvature_nonzero = !rp.is_zero();
    r.corrected_curvature_nonzero = !rc.is_zero();
    r.curvature_witness = rc.first_nonzero();
    report.samples.push_back(std::move(r));
  }
  return report;
}

}  // namespace heisym
