#include "trackforge/nn/serialize.hpp"

#include <zlib.h>

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "trackforge/common/error.hpp"

static_assert(std::endian::native == std::endian::little, "weight files are little-endian");

namespace trackforge::nn {

namespace {

constexpr char kMagic[4] = {'T', 'F', 'W', 'T'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& buf, std::uint32_t v) {
    buf.append(reinterpret_cast<const char*>(&v), sizeof(v));
}

void put_f64_row_major(std::string& buf, const Mat& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double v = m(i, j);
            buf.append(reinterpret_cast<const char*>(&v), sizeof(v));
        }
    }
}

struct Reader {
    const std::string& buf;
    std::size_t pos = 0;

    void need(std::size_t n) const {
        if (pos + n > buf.size()) throw FormatError("weight file truncated");
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v;
        std::memcpy(&v, buf.data() + pos, 4);
        pos += 4;
        return v;
    }
    std::string bytes(std::size_t n) {
        need(n);
        std::string s = buf.substr(pos, n);
        pos += n;
        return s;
    }
    double f64() {
        need(8);
        double v;
        std::memcpy(&v, buf.data() + pos, 8);
        pos += 8;
        return v;
    }
};

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return buf;
}

}  // namespace

void save_weights(const std::filesystem::path& path, const std::string& arch,
                  const std::vector<ParamRef>& params) {
    std::string buf;
    buf.append(kMagic, 4);
    put_u32(buf, kVersion);
    put_u32(buf, static_cast<std::uint32_t>(arch.size()));
    buf.append(arch);
    put_u32(buf, static_cast<std::uint32_t>(params.size()));
    for (const auto& p : params) {
        put_u32(buf, static_cast<std::uint32_t>(p.name.size()));
        buf.append(p.name);
        put_u32(buf, static_cast<std::uint32_t>(p.value->rows()));
        put_u32(buf, static_cast<std::uint32_t>(p.value->cols()));
        put_f64_row_major(buf, *p.value);
    }
    const auto crc = static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(buf.size())));
    put_u32(buf, crc);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out.good()) throw IoError("write failed for " + path.string());
}

void load_weights(const std::filesystem::path& path, const std::string& expected_arch,
                  const std::vector<ParamRef>& params) {
    const std::string buf = read_file(path);
    if (buf.size() < 4 + 4 + 4) throw FormatError("weight file truncated: " + path.string());
    const std::size_t payload = buf.size() - 4;
    std::uint32_t stored_crc;
    std::memcpy(&stored_crc, buf.data() + payload, 4);
    const auto crc = static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(buf.data()), static_cast<uInt>(payload)));
    if (crc != stored_crc) throw FormatError("weight file CRC mismatch: " + path.string());

    const std::string body = buf.substr(0, payload);
    Reader r{body};
    if (r.bytes(4) != std::string(kMagic, 4)) throw FormatError("bad magic in " + path.string());
    if (r.u32() != kVersion) throw FormatError("unsupported weight format version");
    const std::string arch = r.bytes(r.u32());
    if (arch != expected_arch) {
        throw FormatError("architecture mismatch: file has '" + arch + "', expected '" +
                          expected_arch + "'");
    }
    const std::uint32_t count = r.u32();
    if (count != params.size()) {
        throw FormatError("tensor count mismatch: file has " + std::to_string(count) +
                          ", model expects " + std::to_string(params.size()));
    }
    for (const auto& p : params) {
        const std::string name = r.bytes(r.u32());
        const std::uint32_t rows = r.u32();
        const std::uint32_t cols = r.u32();
        if (name != p.name) {
            throw FormatError("tensor name mismatch: file has '" + name + "', expected '" +
                              p.name + "'");
        }
        if (rows != static_cast<std::uint32_t>(p.value->rows()) ||
            cols != static_cast<std::uint32_t>(p.value->cols())) {
            throw FormatError("dimension mismatch for layer '" + name + "': file " +
                              std::to_string(rows) + "x" + std::to_string(cols) + ", expected " +
                              std::to_string(p.value->rows()) + "x" +
                              std::to_string(p.value->cols()));
        }
        for (std::uint32_t i = 0; i < rows; ++i) {
            for (std::uint32_t j = 0; j < cols; ++j) {
                (*p.value)(i, j) = r.f64();
            }
        }
    }
    if (r.pos != payload) throw FormatError("trailing bytes in " + path.string());
}

std::string peek_arch(const std::filesystem::path& path) {
    const std::string buf = read_file(path);
    Reader r{buf};
    if (r.bytes(4) != std::string(kMagic, 4)) throw FormatError("bad magic in " + path.string());
    if (r.u32() != kVersion) throw FormatError("unsupported weight format version");
    return r.bytes(r.u32());
}

}  // namespace trackforge::nn
