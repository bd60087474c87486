#include "oracles.hpp"

#include <agq/agcode.hpp>
#include <agq/io.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace agq {
namespace {

TEST(MatrixFormat, HeaderAndRows)
{
    const auto ag = build(Curve::make(CurveKind::a, 1), 2);
    std::ostringstream out;
    write_matrix(out, ag.code.field(), ag.code.generator());
    const std::string text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "agq-matrix v1 q2=4 modulus=0x7 rows=2 cols=8");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST(MatrixFormat, RoundTripsRandomMatrices)
{
    std::mt19937_64 rng(3);
    for (unsigned e = 1; e <= 6; ++e) {
        const Field f(e);
        const std::size_t rows = rng() % 5;
        const std::size_t cols = 1 + rng() % 7;
        const Matrix m = Matrix::from_rows(cols, oracle::random_rows(f, rows, cols, rng));
        std::stringstream io;
        write_matrix(io, f, m);
        const MatrixFile back = read_matrix(io);
        EXPECT_EQ(back.q2, f.order());
        EXPECT_EQ(back.modulus, f.modulus());
        EXPECT_EQ(back.matrix, m);
    }
}

TEST(MatrixFormat, RejectsMalformedInput)
{
    std::istringstream bad_header("agq-matrix v2 q2=4\n");
    EXPECT_THROW(read_matrix(bad_header), std::runtime_error);
    std::istringstream out_of_field("agq-matrix v1 q2=4 modulus=0x7 rows=1 cols=2\n1 4\n");
    EXPECT_THROW(read_matrix(out_of_field), std::runtime_error);
    std::istringstream truncated("agq-matrix v1 q2=4 modulus=0x7 rows=2 cols=2\n1 2\n");
    EXPECT_THROW(read_matrix(truncated), std::runtime_error);
}

TEST(PointsDigest, StableAndDistinguishesCurves)
{
    const auto a = Curve::make(CurveKind::a, 1);
    EXPECT_EQ(points_digest(*a), points_digest(*Curve::make(CurveKind::a, 1)));
    // For q = 2 both equations read y^2 + y = x^3.
    EXPECT_EQ(points_digest(*a), points_digest(*Curve::make(CurveKind::b, 1)));
    EXPECT_NE(points_digest(*Curve::make(CurveKind::a, 3)),
              points_digest(*Curve::make(CurveKind::b, 3)));
    EXPECT_EQ(points_digest_string(*a).rfind("fnv1a64:", 0), 0u);
    EXPECT_EQ(points_digest_string(*a).size(), 8u + 16u);
}

} // namespace
} // namespace agq
