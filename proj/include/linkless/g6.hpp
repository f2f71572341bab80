#pragma once

// graph6 codec (short form only, n <= 62; graphs here are limited to 32).
//
// Layout: one size byte n+63, then ceil(n(n-1)/2 / 6) data bytes holding the
// upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... six bits per byte, most
// significant bit first, each byte offset by 63. Unused trailing bits are 0.

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "linkless/errors.hpp"
#include "linkless/graph.hpp"

namespace linkless {

enum class G6ErrorKind { BadHeader, BadLength, BadByte, BadPadding, CapacityExceeded };

const char* to_string(G6ErrorKind kind);

class G6Error : public Error {
 public:
  G6Error(G6ErrorKind kind, const std::string& what);
  G6ErrorKind kind() const { return kind_; }

 private:
  G6ErrorKind kind_;
};

/// Decodes one record (no trailing newline). Throws G6Error.
Graph decode_g6(std::string_view line);

/// Encodes g in canonical short form. Throws CapacityExceeded for n > 62.
std::string encode_g6(const Graph& g);

/// One line of a graph6 stream. Exactly one of `graph` and `error` is set.
struct G6Record {
  std::size_t line_number = 0;  // 1-based
  std::string text;             // line without its terminator
  std::optional<Graph> graph;
  std::optional<G6Error> error;

  bool ok() const { return graph.has_value(); }
};

/// Single-pass reader over a newline separated graph6 stream. Accepts LF or
/// CRLF terminators, skips blank lines and a leading ">>graph6<<" marker.
/// Malformed lines come back as error records; reading continues after them.
class G6Reader {
 public:
  explicit G6Reader(std::istream& in) : in_(in) {}

  std::optional<G6Record> next();

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::string buffer_;
};

}  // namespace linkless
