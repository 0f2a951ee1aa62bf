#include "mlspin/snapshot.hpp"

#include <cstring>
#include <fstream>

namespace mlspin {

namespace {
constexpr char kMagic[8] = {'M', 'L', 'S', 'P', 'I', 'N', '1', '\0'};

void put(std::ofstream& out, double v) {
    // little-endian host assumed (x86/aarch64); bytes written verbatim
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

double take(std::ifstream& in) {
    double v = 0;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
} // namespace

void write_snapshot(const std::string& path, const State& Y) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open snapshot file for writing: " + path);
    out.write(kMagic, sizeof kMagic);
    put(out, Y.A.grid.L);
    put(out, double(Y.A.grid.N));
    for (int i = 0; i < 3; ++i) put(out, Y.q[i]);
    for (int i = 0; i < 3; ++i) put(out, Y.p[i]);
    for (int i = 0; i < 3; ++i) put(out, Y.pi[i]);
    for (const VectorField3* F : {&Y.A, &Y.Pi})
        for (int c = 0; c < 3; ++c)
            out.write(reinterpret_cast<const char*>((*F)[c].values.data()),
                      std::streamsize((*F)[c].values.size() * sizeof(double)));
    if (!out) throw std::runtime_error("snapshot write failed: " + path);
}

State read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open snapshot file: " + path);
    char magic[8];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("not a snapshot file (bad magic): " + path);
    const double L = take(in);
    const double Nf = take(in);
    GridSpec g(L, int(Nf));
    State Y(g);
    for (int i = 0; i < 3; ++i) Y.q[i] = take(in);
    for (int i = 0; i < 3; ++i) Y.p[i] = take(in);
    for (int i = 0; i < 3; ++i) Y.pi[i] = take(in);
    for (VectorField3* F : {&Y.A, &Y.Pi})
        for (int c = 0; c < 3; ++c)
            in.read(reinterpret_cast<char*>((*F)[c].values.data()),
                    std::streamsize((*F)[c].values.size() * sizeof(double)));
    if (!in) throw std::runtime_error("snapshot truncated: " + path);
    return Y;
}

} // namespace mlspin
