#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lrclab/seqcore/series.hpp"
#include "lrclab/seqcore/token_sequence.hpp"

namespace lrc {

/// Shortest decimal text that reads back to the same double.
[[nodiscard]] std::string format_real(double x);

// Curve files: header row, `.` decimal point, `\n` line ends.
void write_csv(std::ostream& out, const AcfCurve& curve);          // s,c
void write_csv(std::ostream& out, const RankFrequency& rf);        // rank,freq
void write_csv(std::ostream& out, const TypeTokenCurve& curve);    // m,v
void write_csv(std::ostream& out, const IntervalSequence& ints);   // interval

[[nodiscard]] AcfCurve read_acf_csv(std::istream& in, std::size_t source_length);
[[nodiscard]] RankFrequency read_rank_frequency_csv(std::istream& in);
[[nodiscard]] TypeTokenCurve read_type_token_csv(std::istream& in);

/// Token file body: surface forms separated by single spaces, one trailing
/// newline. Ids without a symbol table render as `w<id>`.
void write_tokens(std::ostream& out, const TokenSequence& seq);

/// Splits a CSV row on commas; no quoting support.
[[nodiscard]] std::vector<std::string> split_csv_row(const std::string& line);

}  // namespace lrc
