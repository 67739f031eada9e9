#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "ordlim/cdf.hpp"
#include "ordlim/graph.hpp"
#include "ordlim/measures.hpp"
#include "ordlim/poset.hpp"
#include "ordlim/recognition.hpp"
#include "ordlim/semiorders.hpp"

namespace ordlim {

// Text formats. Point labels are 1-based; rationals are written "num/den".
// Blank lines and lines starting with '#' are ignored on input.
//
//   poset <n>          then "i j" per relation i < j (closure applied on read;
//                      the writer emits sorted cover pairs)
//   stepmeasure <m>    then "lo hi : y1 p1 ; y2 p2 ; ..." per cell
//   atoms <k>          then "x y w" per atom
//   mixed <u> <k>      then u piece rows as in stepmeasure, then k atom rows
//   pwl <k>            then "x left right slope_to_next" per knot
//   rate <k>           then "lo hi value" per piece
//   graph <n>          then "i j" per edge
//
// Readers throw ParseError with the offending line.

FinitePoset parse_poset(std::string_view text);
std::string format_poset(const FinitePoset& p);

StepKernelMeasure parse_step_measure(std::string_view text);
std::string format_step_measure(const StepKernelMeasure& mu);

AtomicMeasure parse_atomic_measure(std::string_view text);
std::string format_atomic_measure(const AtomicMeasure& mu);

MixedMeasure parse_mixed_measure(std::string_view text);
std::string format_mixed_measure(const MixedMeasure& mu);

using AnyMeasure = std::variant<StepKernelMeasure, AtomicMeasure, MixedMeasure>;
/// Dispatches on the header word.
AnyMeasure parse_any_measure(std::string_view text);
std::string format_any_measure(const AnyMeasure& mu);

PiecewiseLinear parse_pwl(std::string_view text);
std::string format_pwl(const PiecewiseLinear& f);

MonotoneRC parse_g(std::string_view text);
std::string format_g(const MonotoneRC& g);

StepCDF parse_cdf(std::string_view text);
std::string format_cdf(const StepCDF& f);

RateFunction parse_rate(std::string_view text);
std::string format_rate(const RateFunction& r);

SimpleGraph parse_graph(std::string_view text);
std::string format_graph(const SimpleGraph& g);

/// CSV rows "index, rank, a, b" with a header line.
std::string format_representation_csv(const IntervalRepresentation& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ordlim
