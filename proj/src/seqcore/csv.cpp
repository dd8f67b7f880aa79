#include "lrclab/seqcore/csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "lrclab/seqcore/error.hpp"

namespace lrc {

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else if (ch != '\r') {
      cell.push_back(ch);
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

namespace {

template <typename T>
T parse_number(const std::string& text, std::size_t line_no) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw DataError("line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return value;
}

// Reads a two-column CSV with the given header and hands each row to `row`.
template <typename Fn>
void read_pairs(std::istream& in, const std::string& header, Fn&& row) {
  std::string line;
  if (!std::getline(in, line) || split_csv_row(line) != split_csv_row(header)) {
    throw DataError("expected CSV header '" + header + "'");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv_row(line);
    if (cells.size() != 2) {
      throw DataError("line " + std::to_string(line_no) + ": expected 2 columns");
    }
    row(cells[0], cells[1], line_no);
  }
}

}  // namespace

void write_csv(std::ostream& out, const AcfCurve& curve) {
  out << "s,c\n";
  for (const auto& p : curve.points) out << p.s << ',' << format_real(p.c) << '\n';
}

void write_csv(std::ostream& out, const RankFrequency& rf) {
  out << "rank,freq\n";
  for (const auto& e : rf.entries) out << e.rank << ',' << e.freq << '\n';
}

void write_csv(std::ostream& out, const TypeTokenCurve& curve) {
  out << "m,v\n";
  for (const auto& p : curve.samples) out << p.m << ',' << p.v << '\n';
}

void write_csv(std::ostream& out, const IntervalSequence& ints) {
  out << "interval\n";
  for (auto r : ints.intervals()) out << r << '\n';
}

AcfCurve read_acf_csv(std::istream& in, std::size_t source_length) {
  AcfCurve curve;
  curve.source_length = source_length;
  read_pairs(in, "s,c", [&](const std::string& a, const std::string& b, std::size_t n) {
    curve.points.push_back({parse_number<std::size_t>(a, n), parse_number<double>(b, n)});
  });
  return curve;
}

RankFrequency read_rank_frequency_csv(std::istream& in) {
  RankFrequency rf;
  read_pairs(in, "rank,freq", [&](const std::string& a, const std::string& b, std::size_t n) {
    rf.entries.push_back({parse_number<std::size_t>(a, n), parse_number<std::uint64_t>(b, n)});
  });
  return rf;
}

TypeTokenCurve read_type_token_csv(std::istream& in) {
  TypeTokenCurve curve;
  read_pairs(in, "m,v", [&](const std::string& a, const std::string& b, std::size_t n) {
    curve.samples.push_back({parse_number<std::size_t>(a, n), parse_number<std::size_t>(b, n)});
  });
  return curve;
}

void write_tokens(std::ostream& out, const TokenSequence& seq) {
  bool first = true;
  for (SymbolId id : seq.tokens()) {
    if (!first) out << ' ';
    first = false;
    if (seq.has_symbols()) {
      out << seq.symbols()[id];
    } else {
      out << 'w' << id;
    }
  }
  out << '\n';
}

}  // namespace lrc
