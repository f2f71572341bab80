#include "linkless/g6.hpp"

namespace linkless {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::size_t data_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

const char* to_string(G6ErrorKind kind) {
  switch (kind) {
    case G6ErrorKind::BadHeader: return "BadHeader";
    case G6ErrorKind::BadLength: return "BadLength";
    case G6ErrorKind::BadByte: return "BadByte";
    case G6ErrorKind::BadPadding: return "BadPadding";
    case G6ErrorKind::CapacityExceeded: return "CapacityExceeded";
  }
  return "Unknown";
}

G6Error::G6Error(G6ErrorKind kind, const std::string& what)
    : Error(std::string(linkless::to_string(kind)) + ": " + what), kind_(kind) {}

Graph decode_g6(std::string_view line) {
  if (line.empty()) throw G6Error(G6ErrorKind::BadHeader, "empty record");
  const int head = static_cast<unsigned char>(line[0]);
  if (head < 63 + 1 || head > 63 + 62) {
    throw G6Error(G6ErrorKind::BadHeader, "size byte " + std::to_string(head) + " outside 64..125");
  }
  const int n = head - 63;
  if (n > kMaxVertices) {
    throw G6Error(G6ErrorKind::CapacityExceeded, "order " + std::to_string(n) + " exceeds 32");
  }
  const std::size_t expected = data_bytes(n);
  if (line.size() != expected + 1) {
    throw G6Error(G6ErrorKind::BadLength, "expected " + std::to_string(expected + 1) + " bytes, got " +
                                              std::to_string(line.size()));
  }
  for (std::size_t i = 1; i < line.size(); ++i) {
    const int b = static_cast<unsigned char>(line[i]);
    if (b < 63 || b > 126) {
      throw G6Error(G6ErrorKind::BadByte, "byte " + std::to_string(b) + " at offset " + std::to_string(i));
    }
  }

  std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  auto bit_at = [&](std::size_t index) {
    const int b = static_cast<unsigned char>(line[1 + index / 6]) - 63;
    return (b >> (5 - static_cast<int>(index % 6))) & 1;
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k) != 0) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
    }
  }
  for (; k < expected * 6; ++k) {
    if (bit_at(k) != 0) throw G6Error(G6ErrorKind::BadPadding, "nonzero padding bit");
  }
  return Graph::from_adjacency(n, rows);
}

std::string encode_g6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw CapacityExceeded("graph6 short form holds at most 62 vertices");
  std::string out(1 + data_bytes(n), static_cast<char>(63));
  out[0] = static_cast<char>(n + 63);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) {
        auto& byte = out[1 + k / 6];
        byte = static_cast<char>(byte + (1 << (5 - static_cast<int>(k % 6))));
      }
    }
  }
  return out;
}

std::optional<G6Record> G6Reader::next() {
  while (std::getline(in_, buffer_)) {
    ++line_;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    std::string_view text = buffer_;
    if (line_ == 1 && text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) continue;

    G6Record rec;
    rec.line_number = line_;
    rec.text = std::string(text);
    try {
      rec.graph = decode_g6(text);
    } catch (const G6Error& e) {
      rec.error = e;
    }
    return rec;
  }
  return std::nullopt;
}

}  // namespace linkless
