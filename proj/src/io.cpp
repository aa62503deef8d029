#include "se2wave/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace se2wave::io {

static_assert(std::endian::native == std::endian::little,
              "SE2F serialization assumes a little-endian host");

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void fail(const std::string& what) { throw FormatError(what); }

}  // namespace

void write_circle_csv(std::ostream& out, const CircleFunction& u) {
    out << "phi,re,im\n";
    for (std::size_t j = 0; j < u.size(); ++j) {
        out << format_double(u.phi(j)) << ',' << format_double(u[j].real()) << ','
            << format_double(u[j].imag()) << '\n';
    }
}

void write_circle_csv(const std::filesystem::path& path, const CircleFunction& u) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path.string() + " for writing");
    write_circle_csv(out, u);
}

CircleFunction read_circle_csv(std::istream& in) {
    std::vector<Complex> values;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string phi_s, re_s, im_s;
        if (!std::getline(row, phi_s, ',') || !std::getline(row, re_s, ',') ||
            !std::getline(row, im_s)) {
            fail("circle CSV row has fewer than 3 columns: '" + line + "'");
        }
        if (first) {
            first = false;
            char* endp = nullptr;
            std::strtod(phi_s.c_str(), &endp);
            if (endp == phi_s.c_str()) continue;  // header row
        }
        try {
            values.emplace_back(std::stod(re_s), std::stod(im_s));
        } catch (const std::exception&) {
            fail("circle CSV row is not numeric: '" + line + "'");
        }
    }
    if (values.empty()) fail("circle CSV contains no samples");
    try {
        return CircleFunction(std::move(values));
    } catch (const GridError& e) {
        fail(std::string("circle CSV: ") + e.what());
    }
}

CircleFunction read_circle_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    return read_circle_csv(in);
}

namespace {

constexpr char kMagic[4] = {'S', 'E', '2', 'F'};
constexpr std::uint16_t kVersion = 1;
constexpr std::uint16_t kKindPlane = 1;
constexpr std::uint16_t kKindField = 2;

template <typename T>
void put(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(v));
    if (!in) fail("SE2F file truncated");
    return v;
}

void put_samples(std::ostream& out, std::span<const Complex> values) {
    for (const Complex& v : values) {
        put(out, v.real());
        put(out, v.imag());
    }
}

std::vector<Complex> get_samples(std::istream& in, std::size_t count) {
    std::vector<Complex> values(count);
    for (Complex& v : values) {
        const double re = get<double>(in);
        const double im = get<double>(in);
        v = {re, im};
    }
    return values;
}

void put_circle_block(std::ostream& out, const CircleFunction& u) {
    std::ostringstream block;
    write_circle_csv(block, u);
    const std::string bytes = block.str();
    put(out, static_cast<std::uint32_t>(bytes.size()));
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

CircleFunction get_circle_block(std::istream& in) {
    const auto len = get<std::uint32_t>(in);
    std::string bytes(len, '\0');
    in.read(bytes.data(), len);
    if (!in) fail("SE2F provenance block truncated");
    std::istringstream block(bytes);
    return read_circle_csv(block);
}

void write_header(std::ostream& out, std::uint16_t kind, std::uint32_t m, std::uint32_t n_theta,
                  double extent) {
    out.write(kMagic, 4);
    put(out, kVersion);
    put(out, kind);
    put(out, m);
    put(out, n_theta);
    put(out, extent);
}

}  // namespace

void write_se2f(const std::filesystem::path& path, const PlaneFunction& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open " + path.string() + " for writing");
    write_header(out, kKindPlane, static_cast<std::uint32_t>(f.m()), 0, f.extent());
    put_samples(out, f.values());
    if (!out) fail("write to " + path.string() + " failed");
}

void write_se2f(const std::filesystem::path& path, const WaveletField& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("cannot open " + path.string() + " for writing");
    write_header(out, kKindField, static_cast<std::uint32_t>(f.m()),
                 static_cast<std::uint32_t>(f.n_theta()), f.extent());
    put_samples(out, f.values());
    put(out, f.omega());
    const std::uint16_t flag = f.has_provenance() ? 1 : 0;
    put(out, flag);
    if (flag) {
        put_circle_block(out, f.provenance_u0());
        put_circle_block(out, f.provenance_phi());
    }
    if (!out) fail("write to " + path.string() + " failed");
}

Se2fPayload read_se2f(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) fail(path.string() + " is not an SE2F file");
    const auto version = get<std::uint16_t>(in);
    if (version != kVersion) fail("unsupported SE2F version " + std::to_string(version));
    const auto kind = get<std::uint16_t>(in);
    const auto m = get<std::uint32_t>(in);
    const auto n_theta = get<std::uint32_t>(in);
    const auto extent = get<double>(in);

    if (kind == kKindPlane) {
        if (n_theta != 0) fail("SE2F plane payload with nonzero n_theta");
        return PlaneFunction(m, extent, get_samples(in, std::size_t(m) * m));
    }
    if (kind != kKindField) fail("unknown SE2F payload kind " + std::to_string(kind));

    std::vector<Complex> values = get_samples(in, std::size_t(m) * m * n_theta);
    const auto omega = get<double>(in);
    WaveletField field(omega, FieldGrid{m, extent, n_theta}, std::move(values));
    const auto flag = get<std::uint16_t>(in);
    if (flag == 1) {
        CircleFunction u0 = get_circle_block(in);
        CircleFunction phi = get_circle_block(in);
        // Densities are derived data; rebuild them so a reloaded field supports
        // the same norm/inversion operations as a freshly analyzed one.
        const std::size_t n = u0.size();
        if (phi.size() != n || n % n_theta != 0) fail("SE2F provenance grids are inconsistent");
        const std::size_t stride = n / n_theta;
        std::vector<CircleFunction> densities;
        densities.reserve(n_theta);
        for (std::size_t l = 0; l < n_theta; ++l) {
            std::vector<Complex> d(n);
            const std::size_t shift = l * stride;
            for (std::size_t j = 0; j < n; ++j) {
                d[j] = std::conj(u0[(j + n - shift) % n]) * phi[j];
            }
            densities.emplace_back(std::move(d));
        }
        field.set_provenance(std::move(u0), std::move(phi));
        field.set_densities(std::move(densities));
    } else if (flag != 0) {
        fail("unknown SE2F provenance flag");
    }
    return field;
}

PlaneFunction read_se2f_plane(const std::filesystem::path& path) {
    Se2fPayload payload = read_se2f(path);
    if (auto* plane = std::get_if<PlaneFunction>(&payload)) return std::move(*plane);
    fail(path.string() + " holds a field, expected a plane function");
}

WaveletField read_se2f_field(const std::filesystem::path& path) {
    Se2fPayload payload = read_se2f(path);
    if (auto* field = std::get_if<WaveletField>(&payload)) return std::move(*field);
    fail(path.string() + " holds a plane function, expected a field");
}

namespace {

int next_pgm_token(std::istream& in) {
    // Skips whitespace and '#' comments, returns the next integer.
    for (;;) {
        int c = in.peek();
        if (c == EOF) fail("PGM header truncated");
        if (std::isspace(c)) {
            in.get();
            continue;
        }
        if (c == '#') {
            std::string comment;
            std::getline(in, comment);
            continue;
        }
        break;
    }
    int value = 0;
    in >> value;
    if (!in) fail("PGM header is not numeric");
    return value;
}

}  // namespace

PlaneFunction read_pgm(const std::filesystem::path& path, double extent) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open " + path.string());
    char p = 0, five = 0;
    in.get(p);
    in.get(five);
    if (p != 'P' || five != '5') fail(path.string() + " is not a binary (P5) PGM");
    const int width = next_pgm_token(in);
    const int height = next_pgm_token(in);
    const int maxval = next_pgm_token(in);
    if (width <= 0 || height <= 0 || maxval <= 0 || maxval > 65535) fail("invalid PGM header");
    in.get();  // single whitespace before raster

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    const bool wide = maxval > 255;
    std::vector<unsigned char> raw(count * (wide ? 2 : 1));
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (!in) fail("PGM raster truncated");

    std::size_t m = static_cast<std::size_t>(std::max(width, height));
    if (m % 2 != 0) ++m;
    m = std::max<std::size_t>(m, 16);
    std::vector<Complex> values(m * m, Complex{0.0, 0.0});
    const std::size_t off_x = (m - static_cast<std::size_t>(width)) / 2;
    const std::size_t off_y = (m - static_cast<std::size_t>(height)) / 2;
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            const std::size_t idx = static_cast<std::size_t>(r) * width + c;
            const double raw_v = wide ? raw[2 * idx] * 256.0 + raw[2 * idx + 1]
                                      : static_cast<double>(raw[idx]);
            const double v = raw_v / static_cast<double>(maxval);
            // column -> x index, row 0 is the top of the image -> +y
            const std::size_t j = off_x + static_cast<std::size_t>(c);
            const std::size_t k = off_y + static_cast<std::size_t>(height - 1 - r);
            values[j * m + k] = Complex(v, 0.0);
        }
    }
    return PlaneFunction(m, extent, std::move(values));
}

}  // namespace se2wave::io
