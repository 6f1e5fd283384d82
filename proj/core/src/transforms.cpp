#include "transforms.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace finhilb::detail {

namespace {

std::mutex plan_mutex;
std::map<std::pair<int, int>, fftw_plan> plan_cache;

// Plans are created with FFTW_UNALIGNED so the new-array execute interface
// accepts whatever buffers the caller hands in.
fftw_plan plan_for(fftw_r2r_kind kind, int n) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(static_cast<int>(kind), n);
    auto it = plan_cache.find(key);
    if (it != plan_cache.end()) return it->second;
    std::vector<double> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    fftw_plan p = fftw_plan_r2r_1d(n, in.data(), out.data(), kind,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!p) throw std::runtime_error("fftw plan creation failed");
    plan_cache.emplace(key, p);
    return p;
}

std::vector<double> run(fftw_r2r_kind kind, const std::vector<double>& in) {
    if (in.empty()) return {};
    const int n = static_cast<int>(in.size());
    std::vector<double> inc(in);  // fftw may scribble on the input buffer
    std::vector<double> out(in.size());
    fftw_execute_r2r(plan_for(kind, n), inc.data(), out.data());
    return out;
}

}  // namespace

std::vector<double> dct2(const std::vector<double>& in) { return run(FFTW_REDFT10, in); }
std::vector<double> dct3(const std::vector<double>& in) { return run(FFTW_REDFT01, in); }
std::vector<double> dst2(const std::vector<double>& in) { return run(FFTW_RODFT10, in); }
std::vector<double> dst3(const std::vector<double>& in) { return run(FFTW_RODFT01, in); }
std::vector<double> r2hc(const std::vector<double>& in) { return run(FFTW_R2HC, in); }
std::vector<double> hc2r(const std::vector<double>& in) { return run(FFTW_HC2R, in); }

}  // namespace finhilb::detail
