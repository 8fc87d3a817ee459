#include "fusionlim/fpla/matrix_io.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string>

#include "fusionlim/error.hpp"

namespace fusionlim::fpla {

namespace {

constexpr std::array<char, 4> kMagic{'F', 'P', 'M', 'X'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  void bytes(const void* data, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ = (hash_ ^ b[i]) * 0x100000001b3ULL;
    }
    out_.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
  }
  template <typename T>
  void integer(T v) {
    unsigned char buf[sizeof(T)];
    for (std::size_t i = 0; i < sizeof(T); ++i)
      buf[i] = static_cast<unsigned char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff);
    bytes(buf, sizeof(T));
  }
  void finish() {
    const std::uint64_t h = hash_;
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((h >> (8 * i)) & 0xff);
    out_.write(reinterpret_cast<const char*>(buf), 8);
    if (!out_) throw Error("matrix write failed");
  }

 private:
  std::ostream& out_;
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  void bytes(void* data, std::size_t n) {
    in_.read(static_cast<char*>(data), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n)
      throw Error("matrix record truncated");
    const auto* b = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) hash_ = (hash_ ^ b[i]) * 0x100000001b3ULL;
  }
  template <typename T>
  T integer() {
    unsigned char buf[sizeof(T)];
    bytes(buf, sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= std::uint64_t{buf[i]} << (8 * i);
    return static_cast<T>(v);
  }
  void finish() {
    const std::uint64_t expected = hash_;
    unsigned char buf[8];
    in_.read(reinterpret_cast<char*>(buf), 8);
    if (in_.gcount() != 8) throw Error("matrix record truncated");
    std::uint64_t got = 0;
    for (int i = 0; i < 8; ++i) got |= std::uint64_t{buf[i]} << (8 * i);
    if (got != expected) throw Error("matrix record checksum mismatch");
  }

 private:
  std::istream& in_;
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

void write_header(Writer& w, unsigned p, std::size_t rows, std::size_t cols,
                  std::uint8_t kind) {
  w.bytes(kMagic.data(), kMagic.size());
  w.integer<std::uint32_t>(kVersion);
  w.integer<std::uint32_t>(p);
  w.integer<std::uint64_t>(rows);
  w.integer<std::uint64_t>(cols);
  w.integer<std::uint8_t>(kind);
}

}  // namespace

void write_matrix(std::ostream& out, const FpMatrix& m) {
  Writer w(out);
  write_header(w, m.p(), m.rows(), m.cols(), 0);
  if (!m.data().empty()) w.bytes(m.data().data(), m.data().size());
  w.finish();
}

void write_matrix(std::ostream& out, const SparseFpMatrix& m) {
  Writer w(out);
  write_header(w, m.p(), m.rows(), m.cols(), 1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto col = m.column(c);
    w.integer<std::uint32_t>(static_cast<std::uint32_t>(col.size()));
    for (const auto& e : col) {
      w.integer<std::uint32_t>(e.index);
      w.integer<std::uint8_t>(e.value);
    }
  }
  w.finish();
}

AnyMatrix read_matrix(std::istream& in) {
  Reader r(in);
  std::array<char, 4> magic{};
  r.bytes(magic.data(), magic.size());
  if (magic != kMagic) throw Error("not a matrix record (bad magic)");
  if (r.integer<std::uint32_t>() != kVersion)
    throw Error("unsupported matrix record version");
  const auto p = r.integer<std::uint32_t>();
  const auto rows = r.integer<std::uint64_t>();
  const auto cols = r.integer<std::uint64_t>();
  const auto kind = r.integer<std::uint8_t>();
  if (!is_prime(p) || p > kMaxPrime) throw Error("matrix record has invalid modulus");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 34;
  if (rows > kLimit || cols > kLimit || (kind == 0 && rows * cols > kLimit))
    throw Error("matrix record dimensions implausible");

  if (kind == 0) {
    FpMatrix m(p, rows, cols);
    Vector buf(rows * cols);
    if (!buf.empty()) r.bytes(buf.data(), buf.size());
    for (std::size_t i = 0; i < buf.size(); ++i) {
      if (buf[i] >= p) throw Error("matrix record residue out of range");
      m.set(i / cols, i % cols, buf[i]);
    }
    r.finish();
    return m;
  }
  if (kind != 1) throw Error("matrix record has unknown kind");
  std::vector<Triplet> triplets;
  for (std::uint64_t c = 0; c < cols; ++c) {
    const auto count = r.integer<std::uint32_t>();
    if (count > rows) throw Error("matrix record column overfull");
    for (std::uint32_t k = 0; k < count; ++k) {
      const auto row = r.integer<std::uint32_t>();
      const auto value = r.integer<std::uint8_t>();
      if (row >= rows || value == 0 || value >= p)
        throw Error("matrix record sparse entry invalid");
      triplets.push_back({row, static_cast<std::uint32_t>(c), value});
    }
  }
  r.finish();
  return SparseFpMatrix::from_triplets(p, rows, cols, std::move(triplets));
}

FpMatrix read_dense_matrix(std::istream& in) {
  auto any = read_matrix(in);
  if (auto* d = std::get_if<FpMatrix>(&any)) return std::move(*d);
  return std::get<SparseFpMatrix>(any).to_dense();
}

}  // namespace fusionlim::fpla
