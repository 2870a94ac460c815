#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "muskatlab/errors.hpp"

namespace muskat {

// Uniform periodic grid on [-L, L) with N samples.  Resolved wavenumbers are
// integer multiples of pi/L up to the Nyquist index N/2.
struct Grid {
    double half_length = std::numbers::pi;
    int sample_count = 1024;

    static Grid make(double half_length, int sample_count);

    double spacing() const { return 2.0 * half_length / sample_count; }
    double x(int m) const { return -half_length + m * spacing(); }
    int nyquist_index() const { return sample_count / 2; }
    // wavenumber of spectral bin j in [0, N/2]
    double wavenumber(int j) const { return j * std::numbers::pi / half_length; }
    double nyquist_wavenumber() const { return wavenumber(nyquist_index()); }

    bool operator==(const Grid& o) const {
        return half_length == o.half_length && sample_count == o.sample_count;
    }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

class RealField {
public:
    RealField() = default;
    static RealField zeros(const Grid& g) { return RealField(g, std::vector<double>(g.sample_count, 0.0)); }
    static RealField from_samples(const Grid& g, std::vector<double> samples);
    static RealField from_function(const Grid& g, const std::function<double(double)>& f);

    const Grid& grid() const { return grid_; }
    int size() const { return static_cast<int>(samples_.size()); }
    const std::vector<double>& samples() const { return samples_; }
    std::vector<double>& samples() { return samples_; }
    double operator[](int m) const { return samples_[m]; }
    double& operator[](int m) { return samples_[m]; }
    // cyclically wrapped access
    double at_wrapped(int m) const {
        int n = size();
        int r = m % n;
        if (r < 0) r += n;
        return samples_[r];
    }

    double mean() const;
    double max_abs() const;
    double l2_norm() const;  // (h * sum u^2)^(1/2)
    bool is_finite() const;

    RealField& operator+=(const RealField& o);
    RealField& operator-=(const RealField& o);
    RealField& operator*=(double c);
    RealField& operator+=(double c);
    RealField& operator-=(double c) { return *this += -c; }
    friend RealField operator+(RealField a, const RealField& b) { return a += b; }
    friend RealField operator-(RealField a, const RealField& b) { return a -= b; }
    friend RealField operator*(RealField a, double c) { return a *= c; }
    friend RealField operator*(double c, RealField a) { return a *= c; }

private:
    RealField(const Grid& g, std::vector<double> samples) : grid_(g), samples_(std::move(samples)) {}
    Grid grid_;
    std::vector<double> samples_;
};

void require_same_grid(const RealField& a, const RealField& b, const char* where);

// Half-complex spectrum: bins j = 0..N/2 of the forward DFT
// u_hat[j] = sum_m u[m] exp(-2 pi i j m / N); bins 0 and N/2 are real.
struct Spectrum {
    Grid grid;
    std::vector<std::complex<double>> bins;
};

Spectrum to_spectrum(const RealField& u);
RealField to_field(const Spectrum& s);

}  // namespace muskat
