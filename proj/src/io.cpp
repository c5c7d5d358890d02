#include "opmatch/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace opmatch {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
}

Value parse_value(const std::string& tok, const std::string& path, int line) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0' || errno == ERANGE)
        fail(path, line, "invalid integer '" + tok + "'");
    return v;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    return out;
}

}  // namespace

Sequence read_sequence(const std::string& path) {
    std::ifstream in = open_in(path);
    Sequence s;
    std::string line, tok;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        while (ls >> tok) s.push_back(parse_value(tok, path, lineno));
    }
    return s;
}

Matrix read_matrix(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line, tok;
    int lineno = 1;
    if (!std::getline(in, line)) fail(path, 1, "missing header line 'w h'");
    std::istringstream hs(line);
    long long w = 0, h = 0;
    if (!(hs >> w >> h) || (hs >> tok) || w < 0 || h < 0 || (w == 0) != (h == 0))
        fail(path, 1, "expected header 'w h'");
    Matrix m(static_cast<int>(w), static_cast<int>(h));
    for (int y = 1; y <= h; ++y) {
        ++lineno;
        if (!std::getline(in, line)) fail(path, lineno, "missing matrix row");
        std::istringstream ls(line);
        for (int x = 1; x <= w; ++x) {
            if (!(ls >> tok)) fail(path, lineno, "row too short");
            m.at(x, y) = parse_value(tok, path, lineno);
        }
        if (ls >> tok) fail(path, lineno, "row too long");
    }
    return m;
}

void write_sequence(const std::string& path, const Sequence& s) {
    std::ofstream out = open_out(path);
    for (Value v : s) out << v << '\n';
    if (!out) throw std::runtime_error(path + ": write failed");
}

void write_matrix(const std::string& path, const Matrix& m) {
    std::ofstream out = open_out(path);
    out << m.width() << ' ' << m.height() << '\n';
    for (int y = 1; y <= m.height(); ++y) {
        for (int x = 1; x <= m.width(); ++x) {
            if (x > 1) out << ' ';
            out << m.at(x, y);
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace opmatch
