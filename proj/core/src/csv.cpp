#include "statmc/csv.hpp"

#include <cstdio>

namespace statmc::csv {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Row& Row::raw(const std::string& field) {
    if (!first_) out_ << ',';
    first_ = false;
    out_ << field;
    return *this;
}

void write_histogram(std::ostream& out, const Histogram& h) {
    out << "bin_lo,bin_hi,count\n";
    for (std::size_t i = 0; i < h.bins(); ++i) {
        Row(out).real(h.bin_lo(i)).real(h.bin_hi(i)).integer(h.counts()[i]);
    }
}

void write_summary(std::ostream& out, const SummaryStats& s) {
    out << "n,mean,variance,std,stderr\n";
    Row(out)
        .integer(static_cast<std::uint64_t>(s.n))
        .real(s.mean)
        .real(s.variance)
        .real(s.std_dev)
        .real(s.std_err);
}

}  // namespace statmc::csv
