#include "logsum/model.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <random>
#include <stdexcept>

namespace logsum {

namespace {

// splitmix64; decorrelates nearby seeds before feeding the engine.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void write_u64(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t read_u64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

void write_f64(std::ostream& os, double d) {
    std::uint64_t v;
    static_assert(sizeof(v) == sizeof(d));
    std::memcpy(&v, &d, 8);
    write_u64(os, v);
}

double read_f64(std::istream& is) {
    std::uint64_t v = read_u64(is);
    double d;
    std::memcpy(&d, &v, 8);
    return d;
}

}  // namespace

int ProblemSpec::m() const { return static_cast<int>(std::lround(alpha * n)); }

void ProblemSpec::validate() const {
    if (n < 1) throw std::invalid_argument("ProblemSpec: n must be positive");
    if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("ProblemSpec: alpha in (0,1]");
    if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("ProblemSpec: rho in (0,1)");
    if (m() < 1) throw std::invalid_argument("ProblemSpec: round(alpha*n) must be >= 1");
}

ProblemInstance generate(const ProblemSpec& spec, std::uint64_t instance_index,
                         std::size_t mem_budget_bytes) {
    spec.validate();
    int n = spec.n;
    int m = spec.m();
    std::size_t bytes = static_cast<std::size_t>(n) * static_cast<std::size_t>(m) * sizeof(double);
    if (bytes > mem_budget_bytes)
        throw std::length_error("generate: measurement matrix exceeds memory budget");

    std::mt19937_64 rng(mix64(spec.seed ^ instance_index));
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    ProblemInstance inst;
    inst.spec = spec;
    inst.a.resize(m, n);
    double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) inst.a(r, c) = scale * gauss(rng);

    inst.x0.resize(n);
    for (int i = 0; i < n; ++i) {
        inst.x0(i) = (unif(rng) < spec.rho) ? gauss(rng) : 0.0;
    }
    inst.y = inst.a * inst.x0;
    return inst;
}

double mse(const Eigen::VectorXd& x_hat, const Eigen::VectorXd& x0) {
    if (x_hat.size() != x0.size()) throw std::invalid_argument("mse: length mismatch");
    return (x_hat - x0).squaredNorm() / static_cast<double>(x0.size());
}

void save_instance(const ProblemInstance& inst, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("save_instance: cannot open " + path);
    int m = inst.spec.m();
    write_u64(os, static_cast<std::uint64_t>(inst.spec.n));
    write_u64(os, static_cast<std::uint64_t>(m));
    write_f64(os, inst.spec.alpha);
    write_f64(os, inst.spec.rho);
    write_u64(os, inst.spec.seed);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < inst.spec.n; ++c) write_f64(os, inst.a(r, c));
    for (int i = 0; i < inst.spec.n; ++i) write_f64(os, inst.x0(i));
    for (int r = 0; r < m; ++r) write_f64(os, inst.y(r));
    if (!os) throw std::runtime_error("save_instance: write failed for " + path);
}

ProblemInstance load_instance(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("load_instance: cannot open " + path);
    ProblemInstance inst;
    std::uint64_t n = read_u64(is);
    std::uint64_t m = read_u64(is);
    inst.spec.n = static_cast<int>(n);
    inst.spec.alpha = read_f64(is);
    inst.spec.rho = read_f64(is);
    inst.spec.seed = read_u64(is);
    inst.a.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    for (std::uint64_t r = 0; r < m; ++r)
        for (std::uint64_t c = 0; c < n; ++c) inst.a(r, c) = read_f64(is);
    inst.x0.resize(static_cast<Eigen::Index>(n));
    for (std::uint64_t i = 0; i < n; ++i) inst.x0(i) = read_f64(is);
    inst.y.resize(static_cast<Eigen::Index>(m));
    for (std::uint64_t r = 0; r < m; ++r) inst.y(r) = read_f64(is);
    if (!is) throw std::runtime_error("load_instance: truncated file " + path);
    return inst;
}

}  // namespace logsum
