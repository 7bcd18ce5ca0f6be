#pragma once

#include <complex>
#include <type_traits>
#include <vector>

namespace cgmn {

/// Scalar helpers shared by the sweep and solver templates. The matrices in
/// this library are always real; the iterates and right-hand sides may be
/// real or complex.
template <typename T>
struct scalar_traits {
    static_assert(std::is_floating_point_v<T>, "unsupported scalar type");
    using real_type = T;
    static constexpr bool is_complex = false;
    static T conj(T x) { return x; }
    static T real(T x) { return x; }
    static T abs2(T x) { return x * x; }
};

template <typename T>
struct scalar_traits<std::complex<T>> {
    using real_type = T;
    static constexpr bool is_complex = true;
    static std::complex<T> conj(std::complex<T> x) { return std::conj(x); }
    static T real(std::complex<T> x) { return x.real(); }
    static T abs2(std::complex<T> x) { return std::norm(x); }
};

template <typename T>
using real_t = typename scalar_traits<T>::real_type;

/// Conjugated inner product <x, y> = sum conj(x_i) y_i.
template <typename T>
T dot(const std::vector<T>& x, const std::vector<T>& y) {
    T acc{};
    for (std::size_t i = 0; i < x.size(); ++i)
        acc += scalar_traits<T>::conj(x[i]) * y[i];
    return acc;
}

template <typename T>
real_t<T> norm2_sq(const std::vector<T>& x) {
    real_t<T> acc{};
    for (const T& v : x) acc += scalar_traits<T>::abs2(v);
    return acc;
}

template <typename T>
real_t<T> norm2(const std::vector<T>& x) {
    return std::sqrt(norm2_sq(x));
}

}  // namespace cgmn
