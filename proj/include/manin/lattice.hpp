#pragma once

#include <string>
#include <vector>

#include "manin/errors.hpp"
#include "manin/ints.hpp"

namespace manin {

// Curve classes live in N1, divisor classes in N^1; the tag keeps the two
// dual lattices from being mixed up silently.
enum class Space { Curve, Divisor };

inline Space opposite(Space s) { return s == Space::Curve ? Space::Divisor : Space::Curve; }

inline std::string space_name(Space s) { return s == Space::Curve ? "curve" : "divisor"; }

struct LatticeVector {
    Space space = Space::Curve;
    std::vector<Int> coords;

    LatticeVector() = default;
    LatticeVector(Space s, std::vector<Int> c) : space(s), coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
    bool is_zero() const {
        for (Int c : coords)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
        return a.space == b.space && a.coords == b.coords;
    }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        if (a.space != b.space) return a.space < b.space;
        return a.coords < b.coords;
    }

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        check_compatible(a, b);
        LatticeVector r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i)
            r.coords[i] = checked_add(r.coords[i], b.coords[i]);
        return r;
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
        check_compatible(a, b);
        LatticeVector r = a;
        for (std::size_t i = 0; i < r.coords.size(); ++i)
            r.coords[i] = checked_sub(r.coords[i], b.coords[i]);
        return r;
    }
    friend LatticeVector operator*(Int k, const LatticeVector& v) {
        LatticeVector r = v;
        for (Int& c : r.coords) c = checked_mul(k, c);
        return r;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coords[i]);
        }
        return s + ")";
    }

private:
    static void check_compatible(const LatticeVector& a, const LatticeVector& b) {
        if (a.space != b.space || a.coords.size() != b.coords.size())
            throw input_error("lattice vectors live in different spaces");
    }
};

// Integer intersection pairing between the divisor and curve lattices.
struct Pairing {
    int rank = 0;
    std::vector<std::vector<Int>> matrix; // rank x rank, pairing(D, C) = D^T M C

    static Pairing identity(int rank) {
        Pairing p;
        p.rank = rank;
        p.matrix.assign(rank, std::vector<Int>(rank, 0));
        for (int i = 0; i < rank; ++i) p.matrix[i][i] = 1;
        return p;
    }

    bool is_identity() const {
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (matrix[i][j] != (i == j ? 1 : 0)) return false;
        return true;
    }

    friend bool operator==(const Pairing& a, const Pairing& b) {
        return a.rank == b.rank && a.matrix == b.matrix;
    }
};

// D^T M C for a divisor class D and curve class C of the shared rank.
inline Int pair(const LatticeVector& divisor, const LatticeVector& curve, const Pairing& p) {
    if (divisor.space != Space::Divisor || curve.space != Space::Curve)
        throw input_error("pair() expects a divisor class and a curve class");
    if (divisor.rank() != p.rank || curve.rank() != p.rank)
        throw input_error("pair() rank mismatch");
    Int total = 0;
    for (int i = 0; i < p.rank; ++i) {
        if (divisor.coords[i] == 0) continue;
        Int row = 0;
        for (int j = 0; j < p.rank; ++j)
            row = checked_add(row, checked_mul(p.matrix[i][j], curve.coords[j]));
        total = checked_add(total, checked_mul(divisor.coords[i], row));
    }
    return total;
}

// Same pairing with the arguments in either order.
inline Int pairing_value(const LatticeVector& a, const LatticeVector& b, const Pairing& p) {
    if (a.space == b.space) throw input_error("pairing_value() needs one vector from each space");
    return a.space == Space::Divisor ? pair(a, b, p) : pair(b, a, p);
}

} // namespace manin
