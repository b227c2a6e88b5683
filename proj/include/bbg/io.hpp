#ifndef BBG_IO_HPP
#define BBG_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bbg/averaging.hpp"
#include "bbg/diophantine.hpp"
#include "bbg/fourier.hpp"
#include "bbg/series.hpp"

namespace bbg::io {

/// RFC-style CSV with a mandatory header row and decimal-string cells.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string str() const {
        std::ostringstream os;
        write_line(os, header_);
        for (const auto& r : rows_) write_line(os, r);
        return os.str();
    }

    void write_file(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("CsvWriter: cannot open '" + path + "'");
        f << str();
    }

    size_t row_count() const { return rows_.size(); }

private:
    static void write_line(std::ostringstream& os, const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << cells[i];
        }
        os << '\n';
    }
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

inline CsvWriter trace_csv(const std::vector<series::TraceRow>& rows) {
    CsvWriter w({"N", "S_N", "gap"});
    for (const auto& r : rows)
        w.add_row({std::to_string(r.N), to_string(r.S_N), to_string(r.gap)});
    return w;
}

inline CsvWriter wild_csv(const std::vector<diophantine::WildRecord>& records) {
    CsvWriter w({"n", "sin_n", "epsilon", "theta_dev", "f_exact", "f_saddle", "rel_error"});
    for (const auto& r : records)
        w.add_row({std::to_string(r.n), to_string(r.sin_n), to_string(r.epsilon),
                   to_string(r.theta_dev), to_string(r.f_exact), to_string(r.f_saddle),
                   to_string(r.rel_error)});
    return w;
}

inline CsvWriter harmonics_csv(const fourier::HarmonicSumReport& rep) {
    CsvWriter w({"k", "contribution", "running_total", "tail_bound"});
    for (const auto& r : rep.per_k)
        w.add_row({std::to_string(r.k), to_string(r.contribution), to_string(r.running_total),
                   to_string(r.tail_bound)});
    return w;
}

struct CoefficientExportRow {
    long k = 0;
    long n = 0;
    std::string re_num;  // decimal big-integer strings
    std::string im_num;
    std::string denom;
};

/// Exact coefficient table rows {k, n, c_re_num, c_im_num, denom} for
/// k <= min(n, k_max), n <= n_max.
inline std::vector<CoefficientExportRow> coefficient_rows(long k_max, long n_max) {
    std::vector<CoefficientExportRow> rows;
    for (long n = 1; n <= n_max; ++n) {
        for (long k = 0; k <= std::min(k_max, n); ++k) {
            fourier::HarmonicCoefficient c = fourier::fourier_coefficient(k, n);
            rows.push_back({k, n, c.re_num.str(), c.im_num.str(), c.denom.str()});
        }
    }
    return rows;
}

/// (n, J_n, I_n, I_n/n, running M_N) table.
inline CsvWriter averaging_csv(long n_max, const PrecisionContext& ctx) {
    averaging::AveragingSequence seq = averaging::j_recurrence(n_max, ctx);
    CsvWriter w({"n", "J_n", "I_n", "I_n_over_n", "M_running"});
    CompensatedAccumulator m(ctx.working_precision());
    for (long n = 1; n <= n_max; ++n) {
        HPReal term = seq.I[n] / n;
        m.add(term);
        w.add_row({std::to_string(n), to_string(seq.J[n]), to_string(seq.I[n]), to_string(term),
                   to_string(m.value())});
    }
    return w;
}

}  // namespace bbg::io

#endif  // BBG_IO_HPP
