#include "galilei/mechanics.hpp"

#include <stdexcept>

namespace galilei {

namespace {

constexpr int kT = 3;
constexpr int kS = 4;

nlohmann::json matrix_json(const Mat5& m)
{
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 5; ++i)
  {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 5; ++j)
      row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

} // namespace

Mat5 Metric5::eta()
{
  Mat5 m = Mat5::Zero();
  m(kT, kT) = -1.0;
  return m;
}

Mat5 Metric5::galilean()
{
  Mat5 m = Mat5::Zero();
  m.topLeftCorner<3, 3>().setIdentity();
  m(kT, kS) = -1.0;
  m(kS, kT) = -1.0;
  return m;
}

Mat5 Metric5::full(double c)
{
  if (!(c > 0.0))
    throw std::invalid_argument("Metric5::full: c must be positive");
  return eta() + galilean() / (c * c);
}

double Metric5::line_element(const Vec5& dX, double c) { return c * c * dX.dot(full(c) * dX); }

nlohmann::json metric5_table(double c)
{
  return {{"index_order", {"x", "y", "z", "t", "s"}},
          {"c", c},
          {"eta", matrix_json(Metric5::eta())},
          {"h", matrix_json(Metric5::galilean())},
          {"g", matrix_json(Metric5::full(c))},
          {"line_element", "c^2 g_AB dX^A dX^B = -c^2 dt^2 + dx^2 - 2 dt ds"}};
}

Vec5 to_vec5(const Event5& e)
{
  Vec5 X;
  X << e.x, e.t, e.s;
  return X;
}

Event5 to_event5(const Vec5& X) { return {X.head<3>(), X[kT], X[kS]}; }

double inner_product5(const Vec5& X, const Vec5& Y)
{
  return X.head<3>().dot(Y.head<3>()) - X[kT] * Y[kS] - X[kS] * Y[kT];
}

Vec5 frame_change5(const Vec5& X, const Vec3& v)
{
  Vec5 out;
  out.head<3>() = X.head<3>() - v * X[kT];
  out[kT] = X[kT];
  out[kS] = X[kS] - v.dot(X.head<3>()) + 0.5 * v.squaredNorm() * X[kT];
  return out;
}

} // namespace galilei
