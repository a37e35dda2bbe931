#pragma once

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include <Eigen/Core>

#include "muckload/common/error.hpp"

// Little-endian primitives for the binary checkpoint files.
namespace muckload::rl::io {

template <typename U>
void write_uint(std::ostream& os, U value)
{
    char bytes[sizeof(U)];
    for (std::size_t i = 0; i < sizeof(U); ++i) {
        bytes[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
    }
    os.write(bytes, sizeof(U));
}

template <typename U>
U read_uint(std::istream& is)
{
    unsigned char bytes[sizeof(U)];
    if (!is.read(reinterpret_cast<char*>(bytes), sizeof(U))) {
        throw FormatError("unexpected end of binary file");
    }
    U value = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) {
        value |= static_cast<U>(bytes[i]) << (8 * i);
    }
    return value;
}

inline void write_u8(std::ostream& os, std::uint8_t v) { write_uint(os, v); }
inline void write_u32(std::ostream& os, std::uint32_t v) { write_uint(os, v); }
inline void write_u64(std::ostream& os, std::uint64_t v) { write_uint(os, v); }
inline std::uint8_t read_u8(std::istream& is) { return read_uint<std::uint8_t>(is); }
inline std::uint32_t read_u32(std::istream& is) { return read_uint<std::uint32_t>(is); }
inline std::uint64_t read_u64(std::istream& is) { return read_uint<std::uint64_t>(is); }

inline void write_f64(std::ostream& os, double v) { write_u64(os, std::bit_cast<std::uint64_t>(v)); }
inline double read_f64(std::istream& is) { return std::bit_cast<double>(read_u64(is)); }

// Column-major element order.
template <typename Derived>
void write_doubles(std::ostream& os, const Eigen::DenseBase<Derived>& m)
{
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            write_f64(os, m(r, c));
        }
    }
}

template <typename Derived>
void read_doubles(std::istream& is, Eigen::DenseBase<Derived>&& m)
{
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            m(r, c) = read_f64(is);
        }
    }
}

template <typename Derived>
void read_doubles(std::istream& is, Eigen::DenseBase<Derived>& m)
{
    read_doubles(is, std::move(m));
}

inline void write_string(std::ostream& os, const std::string& s)
{
    write_u64(os, s.size());
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_string(std::istream& is)
{
    const std::uint64_t n = read_u64(is);
    if (n > (1ULL << 32)) {
        throw FormatError("implausible string length in binary file");
    }
    std::string s(n, '\0');
    if (!is.read(s.data(), static_cast<std::streamsize>(n))) {
        throw FormatError("unexpected end of binary file");
    }
    return s;
}

}  // namespace muckload::rl::io
