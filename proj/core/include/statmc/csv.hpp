#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "statmc/stats.hpp"

namespace statmc::csv {

/// Fixed formatting for all CSV reals: 6 significant digits, %g style.
/// Stable across runs and platforms for identical doubles.
std::string format_real(double v);

/// One row of comma-joined fields, newline-terminated.
class Row {
public:
    explicit Row(std::ostream& out) : out_(out) {}
    ~Row() { out_ << '\n'; }

    Row& raw(const std::string& field);
    Row& real(double v) { return raw(format_real(v)); }
    Row& integer(std::uint64_t v) { return raw(std::to_string(v)); }
    Row& signed_integer(std::int64_t v) { return raw(std::to_string(v)); }

private:
    std::ostream& out_;
    bool first_ = true;
};

/// Histogram block: header "bin_lo,bin_hi,count" then one row per bin.
void write_histogram(std::ostream& out, const Histogram& h);

/// Summary block: "n,mean,variance,std,stderr" plus the values.
void write_summary(std::ostream& out, const SummaryStats& s);

}  // namespace statmc::csv
