#include "galilei/wave/spectral.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace galilei::spectral {

namespace {

class PlanCache
{
public:
  ~PlanCache()
  {
    for (auto& [key, plan] : plans_)
      fftw_destroy_plan(plan);
  }

  fftw_plan get(std::size_t n, int sign)
  {
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end())
      return it->second;
    // FFTW_ESTIMATE leaves the arrays untouched during planning.
    Field in(n), out(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()), sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr)
      throw std::runtime_error("fftw planning failed");
    plans_.emplace(key, plan);
    return plan;
  }

private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache()
{
  static PlanCache instance;
  return instance;
}

Field run(const Field& f, int sign)
{
  Field in = f;
  Field out(f.size());
  fftw_execute_dft(cache().get(f.size(), sign), reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

void check(const Grid1D& grid, const Field& f)
{
  if (f.size() != grid.size())
    throw std::invalid_argument("field size does not match grid");
}

} // namespace

Field forward(const Field& f)
{
  if (f.empty())
    throw std::invalid_argument("empty field");
  return run(f, FFTW_FORWARD);
}

Field inverse(const Field& coefficients)
{
  if (coefficients.empty())
    throw std::invalid_argument("empty field");
  Field out = run(coefficients, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& z : out)
    z *= scale;
  return out;
}

Field translate(const Grid1D& grid, const Field& f, double d)
{
  check(grid, f);
  if (d == 0.0)
    return f;
  Field c = forward(f);
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] *= std::polar(1.0, -grid.k(j) * d);
  return inverse(c);
}

Field laplacian(const Grid1D& grid, const Field& f)
{
  check(grid, f);
  Field c = forward(f);
  for (std::size_t j = 0; j < c.size(); ++j)
    c[j] *= -grid.k(j) * grid.k(j);
  return inverse(c);
}

} // namespace galilei::spectral
