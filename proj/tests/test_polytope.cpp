#include "doctest.h"

#include <random>

#include "manin/polytope.hpp"

using namespace manin;

namespace {

QVec qv(std::vector<Rational> v) { return v; }

} // namespace

TEST_CASE("unit simplex volumes") {
    RationalPolytope q;
    q.vertices = {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})};
    CHECK(polytope_volume(q) == Rational(1, 6));

    RationalPolytope square;
    square.vertices = {qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})};
    CHECK(polytope_volume(square) == Rational(1));
}

TEST_CASE("flat vertex sets have volume zero") {
    RationalPolytope q;
    q.vertices = {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({1, 1, 0})};
    CHECK(polytope_volume(q) == Rational(0));
    RationalPolytope tiny;
    tiny.vertices = {qv({2, 3})};
    CHECK(polytope_volume(tiny) == Rational(0));
}

TEST_CASE("two-E5 degree-one nef slice has volume 1/45") {
    RationalPolytope q;
    q.vertices = {qv({Rational(0), Rational(0), Rational(0)}),
                  qv({Rational(0), Rational(1, 2), Rational(1, 2)}),
                  qv({Rational(1, 3), Rational(0), Rational(0)}),
                  qv({Rational(1, 5), Rational(0), Rational(2, 5)}),
                  qv({Rational(1, 5), Rational(2, 5), Rational(0)})};
    CHECK(polytope_volume(q) == Rational(1, 45));
    // rotating the fan root changes the triangulation, not the volume
    RationalPolytope rotated;
    rotated.vertices = {q.vertices[1], q.vertices[2], q.vertices[3], q.vertices[4],
                        q.vertices[0]};
    CHECK(polytope_volume(rotated) == Rational(1, 45));
}

TEST_CASE("volume is invariant under unimodular coordinate change") {
    std::mt19937 rng(7);
    std::vector<RationalPolytope> shapes;
    {
        RationalPolytope s;
        s.vertices = {qv({0, 0, 0}), qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})};
        shapes.push_back(s);
        RationalPolytope slice;
        slice.vertices = {qv({Rational(0), Rational(0), Rational(0)}),
                          qv({Rational(0), Rational(1, 2), Rational(1, 2)}),
                          qv({Rational(1, 3), Rational(0), Rational(0)}),
                          qv({Rational(1, 5), Rational(0), Rational(2, 5)}),
                          qv({Rational(1, 5), Rational(2, 5), Rational(0)})};
        shapes.push_back(slice);
    }
    for (int trial = 0; trial < 20; ++trial) {
        // random product of integer shears and coordinate swaps, det = +-1
        int n = 3;
        std::vector<std::vector<Int>> u(n, std::vector<Int>(n, 0));
        for (int i = 0; i < n; ++i) u[i][i] = 1;
        for (int step = 0; step < 6; ++step) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a == b) {
                for (int c = 0; c < n; ++c) u[a][c] = -u[a][c];
            } else if (rng() % 2) {
                std::swap(u[a], u[b]);
            } else {
                Int f = static_cast<Int>(rng() % 5) - 2;
                for (int c = 0; c < n; ++c) u[a][c] += f * u[b][c];
            }
        }
        for (const auto& shape : shapes) {
            RationalPolytope mapped;
            mapped.space = shape.space;
            for (const auto& v : shape.vertices) {
                QVec w(n, Rational(0));
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c) w[r] += Rational(u[r][c]) * v[c];
                mapped.vertices.push_back(w);
            }
            CHECK(polytope_volume(mapped) == polytope_volume(shape));
        }
    }
}
