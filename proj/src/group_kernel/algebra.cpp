#include "galilei/group_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace galilei {

namespace {

constexpr std::array<Generator, kGeneratorCount> kBasis = {Generator::P1, Generator::P2, Generator::P3, Generator::C1,
                                                           Generator::C2, Generator::C3, Generator::H,  Generator::M};

std::size_t idx(Generator g) { return static_cast<std::size_t>(g); }

Generator momentum(int axis) { return kBasis[static_cast<std::size_t>(axis)]; }
Generator boost_generator(int axis) { return kBasis[static_cast<std::size_t>(3 + axis)]; }

// Canonical coordinates of an element close to the identity. Second-order
// corrections are O(|coords|²), which is O(ε⁴) for a group commutator.
AlgebraTable::Row coordinates(const ExtendedGalileiElement& g)
{
  return {g.a[0], g.a[1], g.a[2], g.v[0], g.v[1], g.v[2], g.b, g.bm};
}

ExtendedGalileiElement group_commutator(const ExtendedGalileiElement& g, const ExtendedGalileiElement& h,
                                        GroupKind kind)
{
  if (kind == GroupKind::Extended)
    return compose(compose(compose(g, h), inverse(g)), inverse(h));
  const GalileiElement gp = erase(g);
  const GalileiElement hp = erase(h);
  const GalileiElement c = compose(compose(compose(gp, hp), inverse(gp)), inverse(hp));
  // M generates the central factor; in the plain group it is a direct
  // product, so b_m combines additively and cancels in the commutator.
  return {0.0, c.b, c.a, c.v};
}

} // namespace

std::string generator_name(Generator g)
{
  static const std::array<const char*, kGeneratorCount> names = {"P1", "P2", "P3", "C1", "C2", "C3", "H", "M"};
  return names[idx(g)];
}

void AlgebraTable::set(Generator i, Generator j, Generator k, double value)
{
  c_[idx(i)][idx(j)][idx(k)] = value;
  c_[idx(j)][idx(i)][idx(k)] = -value;
}

AlgebraTable AlgebraTable::galilei()
{
  AlgebraTable table;
  for (int axis = 0; axis < 3; ++axis)
    table.set(boost_generator(axis), Generator::H, momentum(axis), 1.0);
  return table;
}

AlgebraTable AlgebraTable::extended()
{
  AlgebraTable table = galilei();
  for (int axis = 0; axis < 3; ++axis)
    table.set(boost_generator(axis), momentum(axis), Generator::M, 1.0);
  return table;
}

AlgebraTable AlgebraTable::of(GroupKind kind) { return kind == GroupKind::Extended ? extended() : galilei(); }

double AlgebraTable::operator()(Generator k, Generator i, Generator j) const { return c_[idx(i)][idx(j)][idx(k)]; }

AlgebraTable::Row AlgebraTable::bracket(Generator i, Generator j) const { return c_[idx(i)][idx(j)]; }

double AlgebraTable::max_antisymmetry_violation() const
{
  double worst = 0.0;
  for (std::size_t i = 0; i < kGeneratorCount; ++i)
    for (std::size_t j = 0; j < kGeneratorCount; ++j)
      for (std::size_t k = 0; k < kGeneratorCount; ++k)
        worst = std::max(worst, std::abs(c_[i][j][k] + c_[j][i][k]));
  return worst;
}

double AlgebraTable::max_jacobi_violation() const
{
  // [[X_i, X_j], X_l] + cyclic, expanded in the basis.
  double worst = 0.0;
  for (std::size_t i = 0; i < kGeneratorCount; ++i)
    for (std::size_t j = 0; j < kGeneratorCount; ++j)
      for (std::size_t l = 0; l < kGeneratorCount; ++l)
        for (std::size_t out = 0; out < kGeneratorCount; ++out)
        {
          double sum = 0.0;
          for (std::size_t k = 0; k < kGeneratorCount; ++k)
            sum += c_[i][j][k] * c_[k][l][out] + c_[j][l][k] * c_[k][i][out] + c_[l][i][k] * c_[k][j][out];
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

ExtendedGalileiElement one_parameter(Generator x, double epsilon)
{
  ExtendedGalileiElement g;
  const std::size_t i = idx(x);
  if (i < 3)
    g.a[static_cast<int>(i)] = epsilon;
  else if (i < 6)
    g.v[static_cast<int>(i - 3)] = epsilon;
  else if (x == Generator::H)
    g.b = epsilon;
  else
    g.bm = epsilon;
  return g;
}

AlgebraTable::Row numeric_bracket(Generator i, Generator j, GroupKind kind, double epsilon)
{
  if (!(epsilon > 0.0))
    throw std::invalid_argument("numeric_bracket: epsilon must be positive");
  const auto scaled = [&](double eps) {
    const auto coords = coordinates(group_commutator(one_parameter(i, eps), one_parameter(j, eps), kind));
    AlgebraTable::Row row{};
    for (std::size_t k = 0; k < kGeneratorCount; ++k)
      row[k] = coords[k] / (eps * eps);
    return row;
  };
  const auto plus = scaled(epsilon);
  const auto minus = scaled(-epsilon);
  AlgebraTable::Row row{};
  for (std::size_t k = 0; k < kGeneratorCount; ++k)
    row[k] = 0.5 * (plus[k] + minus[k]);
  return row;
}

AlgebraCheck verify_algebra(GroupKind kind, double tolerance, double epsilon)
{
  const AlgebraTable table = AlgebraTable::of(kind);
  AlgebraCheck check;
  for (Generator gi : kBasis)
    for (Generator gj : kBasis)
    {
      const auto row = numeric_bracket(gi, gj, kind, epsilon);
      const auto expected = table.bracket(gi, gj);
      for (std::size_t k = 0; k < kGeneratorCount; ++k)
      {
        const double err = std::abs(row[k] - expected[k]);
        check.max_error = std::max(check.max_error, err);
        if (err > tolerance)
          check.mismatches.push_back({gi, gj, kBasis[k], row[k], expected[k]});
      }
    }
  return check;
}

} // namespace galilei
