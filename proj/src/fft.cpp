#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

namespace se2wave::fft {
namespace {

// Plan creation is the only part of FFTW that is not thread-safe; execution
// through fftw_execute_dft on caller buffers is. Plans are cached per size
// and created with FFTW_UNALIGNED so any buffer may be used.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard lock(mutex_);
        auto& table = sign == FFTW_FORWARD ? forward_ : backward_;
        auto it = table.find(n);
        if (it != table.end()) return it->second;
        std::vector<std::complex<double>> a(n), b(n);
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n),
                                          reinterpret_cast<fftw_complex*>(a.data()),
                                          reinterpret_cast<fftw_complex*>(b.data()), sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        table.emplace(n, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::unordered_map<std::size_t, fftw_plan> forward_;
    std::unordered_map<std::size_t, fftw_plan> backward_;
};

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& in, int sign) {
    std::vector<std::complex<double>> out(in.size());
    fftw_plan plan = PlanCache::instance().get(in.size(), sign);
    // c2c out-of-place plans without FFTW_DESTROY_INPUT leave the input intact.
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in.data())),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

}  // namespace

std::vector<std::complex<double>> forward(const std::vector<std::complex<double>>& in) {
    return run(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> inverse(const std::vector<std::complex<double>>& in) {
    return run(in, FFTW_BACKWARD);
}

}  // namespace se2wave::fft
