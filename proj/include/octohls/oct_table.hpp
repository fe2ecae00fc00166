#pragma once

#include <array>
#include <cstddef>

// Octonion basis products generated at compile time. Everything here is consteval
// or constant data, so the header is safe to include from ISA-specific translation units.
namespace octohls::detail {

template <std::size_t N>
consteval std::array<double, N> cd_conj(const std::array<double, N>& x)
{
    std::array<double, N> r{};
    r[0] = x[0];
    for (std::size_t i = 1; i < N; ++i) r[i] = -x[i];
    return r;
}

// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
template <std::size_t N>
consteval std::array<double, N> cd_mul(const std::array<double, N>& x, const std::array<double, N>& y)
{
    if constexpr (N == 1) {
        return {x[0] * y[0]};
    } else {
        constexpr std::size_t H = N / 2;
        std::array<double, H> a{}, b{}, c{}, d{};
        for (std::size_t i = 0; i < H; ++i) {
            a[i] = x[i];
            b[i] = x[i + H];
            c[i] = y[i];
            d[i] = y[i + H];
        }
        const auto ac = cd_mul<H>(a, c);
        const auto db = cd_mul<H>(cd_conj<H>(d), b);
        const auto da = cd_mul<H>(d, a);
        const auto bc = cd_mul<H>(b, cd_conj<H>(c));
        std::array<double, N> r{};
        for (std::size_t i = 0; i < H; ++i) {
            r[i] = ac[i] - db[i];
            r[i + H] = da[i] + bc[i];
        }
        return r;
    }
}

// e_i * e_j = sign[i][j] * e_{index[i][j]}
struct BasisTable {
    int index[8][8];
    int sign[8][8];
};

consteval BasisTable make_basis_table()
{
    BasisTable t{};
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            std::array<double, 8> ei{}, ej{};
            ei[i] = 1.0;
            ej[j] = 1.0;
            const auto p = cd_mul<8>(ei, ej);
            for (int k = 0; k < 8; ++k) {
                if (p[k] != 0.0) {
                    t.index[i][j] = k;
                    t.sign[i][j] = p[k] > 0 ? 1 : -1;
                }
            }
        }
    }
    return t;
}

inline constexpr BasisTable kOctTable = make_basis_table();

} // namespace octohls::detail
