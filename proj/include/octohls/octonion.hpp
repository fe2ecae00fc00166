#pragma once

#include <array>
#include <cmath>

#include "octohls/oct_table.hpp"

namespace octohls {

// Multiplication table: see oct_table.hpp.
using detail::kOctTable;

struct Octonion {
    std::array<double, 8> c{};

    static constexpr Octonion unit(int i, double s = 1.0)
    {
        Octonion o;
        o.c[i] = s;
        return o;
    }
    static constexpr Octonion real(double s) { return unit(0, s); }

    constexpr double& operator[](int i) { return c[i]; }
    constexpr double operator[](int i) const { return c[i]; }
};

struct ImOctonion {
    std::array<double, 7> c{};  // coefficients of e1..e7

    constexpr Octonion as_octonion() const
    {
        Octonion o;
        for (int i = 0; i < 7; ++i) o.c[i + 1] = c[i];
        return o;
    }
};

constexpr Octonion operator+(const Octonion& x, const Octonion& y)
{
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}
constexpr Octonion operator-(const Octonion& x, const Octonion& y)
{
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}
constexpr Octonion operator-(const Octonion& x)
{
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = -x.c[i];
    return r;
}
constexpr Octonion operator*(double s, const Octonion& x)
{
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = s * x.c[i];
    return r;
}
constexpr Octonion operator*(const Octonion& x, double s) { return s * x; }

constexpr Octonion oct_mul(const Octonion& x, const Octonion& y)
{
    Octonion r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            r.c[kOctTable.index[i][j]] += kOctTable.sign[i][j] * x.c[i] * y.c[j];
    return r;
}
constexpr Octonion operator*(const Octonion& x, const Octonion& y) { return oct_mul(x, y); }

constexpr Octonion operator+(const Octonion& x, const ImOctonion& t) { return x + t.as_octonion(); }
constexpr Octonion operator-(const Octonion& x, const ImOctonion& t) { return x - t.as_octonion(); }

constexpr ImOctonion operator+(const ImOctonion& a, const ImOctonion& b)
{
    ImOctonion r;
    for (int i = 0; i < 7; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}
constexpr ImOctonion operator-(const ImOctonion& a, const ImOctonion& b)
{
    ImOctonion r;
    for (int i = 0; i < 7; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}
constexpr ImOctonion operator-(const ImOctonion& a)
{
    ImOctonion r;
    for (int i = 0; i < 7; ++i) r.c[i] = -a.c[i];
    return r;
}
constexpr ImOctonion operator*(double s, const ImOctonion& a)
{
    ImOctonion r;
    for (int i = 0; i < 7; ++i) r.c[i] = s * a.c[i];
    return r;
}

constexpr Octonion oct_conj(const Octonion& x)
{
    Octonion r = -x;
    r.c[0] = x.c[0];
    return r;
}
constexpr double oct_re(const Octonion& x) { return x.c[0]; }
constexpr ImOctonion oct_im(const Octonion& x)
{
    ImOctonion t;
    for (int i = 0; i < 7; ++i) t.c[i] = x.c[i + 1];
    return t;
}
constexpr double oct_norm2(const Octonion& x)
{
    double s = 0.0;
    for (double v : x.c) s += v * v;
    return s;
}
inline double oct_norm(const Octonion& x) { return std::sqrt(oct_norm2(x)); }
constexpr double oct_dot(const Octonion& x, const Octonion& y)
{
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += x.c[i] * y.c[i];
    return s;
}
constexpr double im_norm2(const ImOctonion& t)
{
    double s = 0.0;
    for (double v : t.c) s += v * v;
    return s;
}
inline double im_norm(const ImOctonion& t) { return std::sqrt(im_norm2(t)); }

// Throws DomainError on the zero octonion.
Octonion oct_inv(const Octonion& x);

// Division conventions: right a * inv(b), left inv(b) * a.
Octonion oct_rdiv(const Octonion& a, const Octonion& b);
Octonion oct_ldiv(const Octonion& a, const Octonion& b);

// (x*y)*z - x*(y*z)
Octonion oct_associator(const Octonion& x, const Octonion& y, const Octonion& z);

} // namespace octohls
