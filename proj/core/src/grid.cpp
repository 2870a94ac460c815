#include "muskatlab/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <mutex>

namespace muskat {

Grid Grid::make(double half_length, int sample_count) {
    if (!(half_length > 0.0)) throw ParamRangeError("Grid: half_length must be positive");
    if (sample_count < 8 || sample_count % 2 != 0)
        throw ParamRangeError("Grid: sample_count must be an even integer >= 8");
    Grid g;
    g.half_length = half_length;
    g.sample_count = sample_count;
    return g;
}

RealField RealField::from_samples(const Grid& g, std::vector<double> samples) {
    if (static_cast<int>(samples.size()) != g.sample_count)
        throw GridMismatchError("RealField: sample count does not match grid");
    return RealField(g, std::move(samples));
}

RealField RealField::from_function(const Grid& g, const std::function<double(double)>& f) {
    std::vector<double> s(g.sample_count);
    for (int m = 0; m < g.sample_count; ++m) s[m] = f(g.x(m));
    return RealField(g, std::move(s));
}

double RealField::mean() const {
    double acc = 0.0;
    for (double v : samples_) acc += v;
    return acc / samples_.size();
}

double RealField::max_abs() const {
    double acc = 0.0;
    for (double v : samples_) acc = std::max(acc, std::abs(v));
    return acc;
}

double RealField::l2_norm() const {
    double acc = 0.0;
    for (double v : samples_) acc += v * v;
    return std::sqrt(grid_.spacing() * acc);
}

bool RealField::is_finite() const {
    return std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); });
}

RealField& RealField::operator+=(const RealField& o) {
    require_same_grid(*this, o, "RealField::operator+=");
    for (int m = 0; m < size(); ++m) samples_[m] += o.samples_[m];
    return *this;
}

RealField& RealField::operator-=(const RealField& o) {
    require_same_grid(*this, o, "RealField::operator-=");
    for (int m = 0; m < size(); ++m) samples_[m] -= o.samples_[m];
    return *this;
}

RealField& RealField::operator*=(double c) {
    for (double& v : samples_) v *= c;
    return *this;
}

RealField& RealField::operator+=(double c) {
    for (double& v : samples_) v += c;
    return *this;
}

void require_same_grid(const RealField& a, const RealField& b, const char* where) {
    if (a.grid() != b.grid()) throw GridMismatchError(std::string(where) + ": fields live on different grids");
}

namespace {

// FFTW plans are cached per transform size; plan creation is serialized, while
// execution uses the new-array interface and is safe to share across threads.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

PlanPair plans_for(int n) {
    static std::mutex mtx;
    static std::map<int, PlanPair> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> re(n);
    std::vector<std::complex<double>> cp(n / 2 + 1);
    PlanPair p;
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    p.fwd = fftw_plan_dft_r2c_1d(n, re.data(), reinterpret_cast<fftw_complex*>(cp.data()), flags);
    p.bwd = fftw_plan_dft_c2r_1d(n, reinterpret_cast<fftw_complex*>(cp.data()), re.data(), flags);
    cache.emplace(n, p);
    return p;
}

}  // namespace

Spectrum to_spectrum(const RealField& u) {
    const int n = u.size();
    PlanPair p = plans_for(n);
    std::vector<double> in(u.samples());
    Spectrum s;
    s.grid = u.grid();
    s.bins.resize(n / 2 + 1);
    fftw_execute_dft_r2c(p.fwd, in.data(), reinterpret_cast<fftw_complex*>(s.bins.data()));
    return s;
}

RealField to_field(const Spectrum& s) {
    const int n = s.grid.sample_count;
    if (static_cast<int>(s.bins.size()) != n / 2 + 1)
        throw GridMismatchError("to_field: spectrum size does not match grid");
    PlanPair p = plans_for(n);
    std::vector<std::complex<double>> in(s.bins);  // c2r destroys its input
    std::vector<double> out(n);
    fftw_execute_dft_c2r(p.bwd, reinterpret_cast<fftw_complex*>(in.data()), out.data());
    const double scale = 1.0 / n;
    for (double& v : out) v *= scale;
    return RealField::from_samples(s.grid, std::move(out));
}

}  // namespace muskat
