#include "anzb/zeros.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

namespace anzb {

ZeroTable load_zeros(std::istream& in, double accuracy) {
    ZeroTable tbl = ZeroTable::load(in, accuracy);
    return tbl;
}

ZeroTable ZeroTable::load(std::istream& in, double accuracy) {
    ZeroTable tbl;
    tbl.accuracy_ = accuracy;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        const char* begin = line.c_str() + start;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin || (end && *end != '\0' && *end != ' ' && *end != '\t' && *end != '\r'))
            throw DataError("zero table: non-numeric line " + std::to_string(lineno));
        if (v <= 0.0)
            throw DataError("zero table: non-positive ordinate at line " + std::to_string(lineno));
        if (!tbl.gamma_.empty() && v <= tbl.gamma_.back())
            throw DataError("zero table: ordinates not ascending at line " + std::to_string(lineno));
        tbl.gamma_.push_back(v);
    }
    if (tbl.gamma_.empty()) throw DataError("zero table: no ordinates");
    return tbl;
}

ZeroTable ZeroTable::load_file(const std::string& path, double accuracy) {
    std::ifstream f(path);
    if (!f) throw DataError("zero table: cannot open " + path);
    return load(f, accuracy);
}

long ZeroTable::count_below(double height) const {
    return static_cast<long>(std::lower_bound(gamma_.begin(), gamma_.end(), height) -
                             gamma_.begin());
}

ZeroTable ZeroTable::truncated(double height) const {
    ZeroTable t;
    t.accuracy_ = accuracy_;
    t.gamma_.assign(gamma_.begin(), gamma_.begin() + count_below(height));
    if (t.gamma_.empty()) throw DataError("zero table: truncation removed all ordinates");
    return t;
}

}  // namespace anzb
