#include "bodies.hpp"

#include <sstream>
#include <stdexcept>

namespace galilei::scenarios::detail {

Grid1D make_grid(const ScenarioConfig& cfg) { return {cfg.grid.n, cfg.grid.x_min, cfg.grid.x_max}; }

SuperposedState packet_state(const ScenarioConfig& cfg, double t)
{
  const Grid1D grid = make_grid(cfg);
  const PacketConfig& p = cfg.physics.packet;
  std::vector<MassChannel> channels;
  for (const auto& m : cfg.physics.masses)
    channels.push_back({m, gaussian_packet(grid, p.x0, p.sigma, p.p0)});
  return {grid, std::move(channels), t};
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string csv_columns(const std::vector<std::string>& header, const std::vector<std::vector<double>>& columns)
{
  if (header.size() != columns.size())
    throw std::logic_error("csv_columns: header and column counts differ");
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < header.size(); ++i)
    os << (i ? "," : "") << header[i];
  os << '\n';
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << (i ? "," : "") << columns[i].at(r);
    os << '\n';
  }
  return os.str();
}

} // namespace galilei::scenarios::detail
