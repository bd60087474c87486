// Text matrix format and point-list digest.
//
//   agq-matrix v1 q2=<Q2> modulus=<hex> rows=<k> cols=<n>
//   <row 0: n space-separated integers>
//   ...

#pragma once

#include <agq/curve.hpp>
#include <agq/lincode.hpp>

#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace agq {

inline std::string hex_string(std::uint64_t v)
{
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

inline void write_matrix(std::ostream& out, const Field& f, const Matrix& m)
{
    out << "agq-matrix v1 q2=" << f.order() << " modulus=" << hex_string(f.modulus())
        << " rows=" << m.rows() << " cols=" << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out << ' ';
            out << m(r, c).value;
        }
        out << '\n';
    }
}

struct MatrixFile
{
    std::uint32_t q2{0};
    std::uint32_t modulus{0};
    Matrix matrix;
};

inline MatrixFile read_matrix(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty matrix file");
    MatrixFile out;
    std::size_t rows = 0;
    std::size_t cols = 0;
    unsigned long q2 = 0;
    unsigned long modulus = 0;
    if (std::sscanf(line.c_str(), "agq-matrix v1 q2=%lu modulus=%lx rows=%zu cols=%zu", &q2,
                    &modulus, &rows, &cols) != 4)
        throw std::runtime_error("bad matrix header: " + line);
    out.q2 = static_cast<std::uint32_t>(q2);
    out.modulus = static_cast<std::uint32_t>(modulus);
    out.matrix = Matrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!std::getline(in, line))
            throw std::runtime_error("matrix file truncated at row " + std::to_string(r));
        std::istringstream ls(line);
        for (std::size_t c = 0; c < cols; ++c) {
            unsigned long v = 0;
            if (!(ls >> v) || v >= q2)
                throw std::runtime_error("bad entry at row " + std::to_string(r) + " col " +
                                         std::to_string(c));
            out.matrix(r, c) = Elem(static_cast<std::uint32_t>(v));
        }
    }
    return out;
}

/// FNV-1a over the (x, y) encodings in canonical order, two little-endian bytes each.
inline std::uint64_t points_digest(const Curve& curve)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](std::uint16_t v) {
        for (int shift : {0, 8}) {
            h ^= static_cast<std::uint8_t>(v >> shift);
            h *= 0x100000001b3ull;
        }
    };
    for (const Point& p : curve.points()) {
        feed(p.x.value);
        feed(p.y.value);
    }
    return h;
}

inline std::string points_digest_string(const Curve& curve)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(points_digest(curve)));
    return buf;
}

} // namespace agq
