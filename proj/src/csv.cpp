#include "dsq/csv.hpp"

#include <cstdio>
#include <fstream>

#include "dsq/cmatrix.hpp"

namespace dsq {

std::string format_sig17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) line += ',';
        line += fields[i];
    }
    line += '\n';
    return line;
}

void write_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("write_atomic: cannot open " + tmp);
        out << content;
        if (!out) throw Error("write_atomic: write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("write_atomic: rename to " + path + " failed");
}

}  // namespace dsq
