#include "netft/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace netft {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_result(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_matrix(std::ostream& out, const real_matrix& m) {
    out << "n " << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << format_full(m(i, j));
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const real_matrix& m) {
    std::ostringstream oss;
    write_matrix(oss, m);
    write_text_file(path, oss.str());
}

real_matrix read_matrix(std::istream& in) {
    std::string tag;
    std::size_t rows = 0, cols = 0;
    if (!(in >> tag) || tag != "n" || !(in >> rows >> cols)) {
        throw io_error("matrix file: malformed header, expected 'n <rows> <cols>'");
    }
    if (rows == 0 || cols == 0) {
        throw io_error("matrix file: dimensions must be at least 1");
    }
    real_matrix m(rows, cols);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!(in >> m.data()[i])) {
            throw io_error("matrix file: truncated or non-numeric value");
        }
    }
    return m;
}

real_matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open for reading: " + path);
    return read_matrix(in);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw io_error("write failed: " + path);
}

} // namespace netft
