#include "galilei/wave/wave_engine.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace galilei {

namespace {

std::string mass_label(std::complex<double> m)
{
  std::ostringstream os;
  os << std::setprecision(6) << m.real();
  if (m.imag() != 0.0)
    os << std::showpos << m.imag() << 'i';
  return os.str();
}

} // namespace

void write_snapshot_csv(std::ostream& out, const SuperposedState& state)
{
  out << "x";
  for (const auto& ch : state.channels()) {
    const std::string label = mass_label(ch.mass);
    out << ",re_m=" << label << ",im_m=" << label;
  }
  out << '\n' << std::setprecision(17);
  for (std::size_t j = 0; j < state.grid().size(); ++j) {
    out << state.grid().x(j);
    for (const auto& ch : state.channels())
      out << ',' << ch.amplitudes[j].real() << ',' << ch.amplitudes[j].imag();
    out << '\n';
  }
}

} // namespace galilei
