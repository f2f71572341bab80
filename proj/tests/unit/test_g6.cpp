#include <sys/resource.h>

#include <sstream>
#include <streambuf>

#include "doctest.h"

#include "linkless/errors.hpp"
#include "linkless/g6.hpp"
#include "support.hpp"

using namespace linkless;
using namespace testing;

namespace {

// Bits of the upper triangle in graph6 column order, packed by hand.
std::string hand_encode(const Graph& g) {
  std::vector<int> bits;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  while (bits.size() % 6 != 0) bits.push_back(0);
  std::string out(1, static_cast<char>(g.order() + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int byte = 0;
    for (std::size_t b = 0; b < 6; ++b) byte = byte * 2 + bits[k + b];
    out.push_back(static_cast<char>(byte + 63));
  }
  return out;
}

G6ErrorKind kind_of(std::string_view text) {
  try {
    decode_g6(text);
  } catch (const G6Error& e) {
    return e.kind();
  }
  FAIL("decoded without error: " << std::string(text));
  return G6ErrorKind::BadHeader;
}

// Endless stream of the same record, cut off after `lines` lines.
class RepeatingBuf : public std::streambuf {
 public:
  RepeatingBuf(std::string line, std::size_t lines) : line_(std::move(line) + "\n"), left_(lines) {}

 protected:
  int_type underflow() override {
    if (left_ == 0) return traits_type::eof();
    --left_;
    setg(line_.data(), line_.data(), line_.data() + line_.size());
    return traits_type::to_int_type(line_[0]);
  }

 private:
  std::string line_;
  std::size_t left_;
};

long max_rss_kb() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

}  // namespace

TEST_CASE("K6 and the tiny cases") {
  const Graph k6 = decode_g6("E~~w");
  CHECK(k6 == Graph::complete(6));
  CHECK(hand_encode(Graph::complete(6)) == "E~~w");
  CHECK(std::string("E~~w") == std::string{char(69), char(126), char(126), char(119)});
  CHECK(encode_g6(Graph::complete(6)) == "E~~w");

  const Graph one = decode_g6("@");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);
  CHECK(encode_g6(Graph(2)) == "A?");
  CHECK(encode_g6(Graph::path(2)) == "A_");
}

TEST_CASE("round trip on random graphs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(2, 16);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    const Graph g = random_graph(rng, order(rng), density(rng));
    const std::string text = encode_g6(g);
    CHECK(text == hand_encode(g));
    CHECK(decode_g6(text) == g);
    CHECK(encode_g6(decode_g6(text)) == text);
  }
}

TEST_CASE("malformed records") {
  CHECK(kind_of("") == G6ErrorKind::BadHeader);
  CHECK(kind_of(std::string(1, char(62))) == G6ErrorKind::BadHeader);
  CHECK(kind_of(std::string(1, char(127))) == G6ErrorKind::BadHeader);
  CHECK(kind_of("~") == G6ErrorKind::BadHeader);  // long form is not supported
  CHECK(kind_of("E~~") == G6ErrorKind::BadLength);
  CHECK(kind_of("E~~ww") == G6ErrorKind::BadLength);
  CHECK(kind_of("E~ w") == G6ErrorKind::BadByte);
  CHECK(kind_of("E~~x") == G6ErrorKind::BadPadding);
  CHECK(kind_of("A`") == G6ErrorKind::BadPadding);
  CHECK(kind_of(std::string(1, char(63 + 33))) == G6ErrorKind::CapacityExceeded);
  CHECK_THROWS_AS(decode_g6("E~ w"), Error);
}

TEST_CASE("stream reader") {
  SUBCASE("three records in order") {
    std::istringstream in("E~~w\nA_\n@\n");
    G6Reader r(in);
    std::vector<std::size_t> lines;
    std::vector<int> orders;
    while (auto rec = r.next()) {
      REQUIRE(rec->ok());
      lines.push_back(rec->line_number);
      orders.push_back(rec->graph->order());
    }
    CHECK(lines == std::vector<std::size_t>{1, 2, 3});
    CHECK(orders == std::vector<int>{6, 2, 1});
  }
  SUBCASE("a bad line is reported in place") {
    std::istringstream in("E~~w\nE~~\nA_\n");
    G6Reader r(in);
    auto a = r.next();
    auto b = r.next();
    auto c = r.next();
    CHECK_FALSE(r.next().has_value());
    REQUIRE(a);
    REQUIRE(b);
    REQUIRE(c);
    CHECK(a->ok());
    CHECK_FALSE(b->ok());
    CHECK(b->line_number == 2);
    CHECK(b->error->kind() == G6ErrorKind::BadLength);
    CHECK(b->text == "E~~");
    CHECK(c->ok());
    CHECK(c->line_number == 3);
  }
  SUBCASE("header, CRLF, blank lines, missing final newline") {
    std::istringstream in(">>graph6<<E~~w\r\n\r\nA_");
    G6Reader r(in);
    auto a = r.next();
    auto b = r.next();
    CHECK_FALSE(r.next().has_value());
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->graph == Graph::complete(6));
    CHECK(a->text == "E~~w");
    CHECK(b->graph == Graph::path(2));
    CHECK(b->line_number == 3);
  }
  SUBCASE("empty input") {
    std::istringstream in("");
    G6Reader r(in);
    CHECK_FALSE(r.next().has_value());
  }
}

TEST_CASE("a million records stream in constant memory") {
  RepeatingBuf buf("I@QFCpSJ?", 1000000);
  std::istream in(&buf);
  G6Reader r(in);
  const long before = max_rss_kb();
  std::size_t count = 0;
  std::size_t last_line = 0;
  while (auto rec = r.next()) {
    REQUIRE(rec->ok());
    ++count;
    last_line = rec->line_number;
  }
  CHECK(count == 1000000);
  CHECK(last_line == 1000000);
  CHECK(max_rss_kb() - before < 8 * 1024);
}

TEST_CASE("byte-exact interop with generator output") {
  for (int n = 1; n <= 7; ++n) {
    const auto path = data_dir() / ("all_graphs_n" + std::to_string(n) + ".g6");
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    const std::string original((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::istringstream lines(original);
    G6Reader r(lines);
    std::string rebuilt;
    while (auto rec = r.next()) {
      REQUIRE(rec->ok());
      rebuilt += encode_g6(*rec->graph) + "\n";
    }
    CHECK(rebuilt == original);
  }
}
