#include "triframes/text_io.hpp"

#include <zlib.h>

#include <fstream>

namespace triframes {

namespace {

std::string inflate_gz(const std::string& path) {
    gzFile file = gzopen(path.c_str(), "rb");
    if (!file) throw std::runtime_error("cannot open " + path);
    std::string out;
    char buf[1 << 16];
    int n = 0;
    while ((n = gzread(file, buf, sizeof(buf))) > 0) out.append(buf, static_cast<std::size_t>(n));
    bool ok = n == 0;
    gzclose(file);
    if (!ok) throw std::runtime_error("gzip read failed: " + path);
    return out;
}

}  // namespace

std::string slurp_file(const std::string& path) {
    if (ends_with(path, ".gz")) return inflate_gz(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string out;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        out.append(buf, static_cast<std::size_t>(in.gcount()));
    return out;
}

std::unique_ptr<std::istream> open_input(const std::string& path) {
    if (ends_with(path, ".gz"))
        return std::make_unique<std::istringstream>(inflate_gz(path));
    auto in = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace triframes
