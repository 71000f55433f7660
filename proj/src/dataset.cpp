#include "unitfit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace unitfit {

const Dataset& load_embedded(int id) {
    const auto& all = embedded_datasets();
    if (id < 1 || id > static_cast<int>(all.size())) {
        throw std::out_of_range("no embedded dataset with id " + std::to_string(id));
    }
    return all[static_cast<size_t>(id - 1)];
}

const Dataset* find_embedded(std::string_view name) {
    for (const auto& d : embedded_datasets()) {
        if (d.name == name) return &d;
    }
    return nullptr;
}

Dataset parse_values(std::string_view text, std::string name) {
    Dataset out;
    out.id = 0;
    out.name = std::move(name);

    std::string token;
    int token_index = 0;
    int line = 1;
    bool in_comment = false;
    bool at_line_start = true;

    auto flush = [&](int at_line) {
        if (token.empty()) return;
        ++token_index;
        size_t consumed = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != token.size()) {
            throw ParseError("cannot parse token '" + token + "' (token " +
                             std::to_string(token_index) + ", line " + std::to_string(at_line) + ")");
        }
        if (!(v > 0.0) || !(v < 1.0)) {
            throw std::domain_error("value " + token + " at token " + std::to_string(token_index) +
                                    " (line " + std::to_string(at_line) + ") lies outside (0, 1)");
        }
        out.values.push_back(v);
        token.clear();
    };

    for (char c : text) {
        if (c == '\n') {
            flush(line);
            in_comment = false;
            at_line_start = true;
            ++line;
            continue;
        }
        if (in_comment) continue;
        if (c == '#' && at_line_start) {
            in_comment = true;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == ',' || c == ';') {
            flush(line);
            if (c != ' ' && c != '\t' && c != '\r') at_line_start = false;
            continue;
        }
        at_line_start = false;
        token.push_back(c);
    }
    flush(line);

    if (out.values.empty()) {
        throw ParseError("input contains no values");
    }
    return out;
}

Dataset load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::ios_base::failure("cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_values(buf.str(), path.filename().string());
}

std::string serialize(const Dataset& data) {
    std::string out;
    char buf[40];
    for (double v : data.values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        out += buf;
    }
    return out;
}

double sample_quantile(std::span<const double> sorted_values, double p) {
    const int n = static_cast<int>(sorted_values.size());
    double pos = p * n + 0.5;
    pos = std::clamp(pos, 1.0, static_cast<double>(n));
    const int k = static_cast<int>(std::floor(pos));
    const double frac = pos - k;
    if (k >= n) return sorted_values[n - 1];
    return sorted_values[k - 1] + frac * (sorted_values[k] - sorted_values[k - 1]);
}

DescriptiveStats describe(std::span<const double> values) {
    const int n = static_cast<int>(values.size());
    if (n < 2) throw std::domain_error("describe: need at least 2 observations");

    std::vector<double> s(values.begin(), values.end());
    std::sort(s.begin(), s.end());

    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= n;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : s) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    const double var_sample = m2 / (n - 1);
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if (s.front() == s.back() || !(m2 > 0.0)) {
        throw std::domain_error("describe: zero variance (all values equal)");
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    // moment ratios with the usual small-sample bias corrections
    const double g1 = m3 / std::pow(m2, 1.5);
    const double b2 = m4 / (m2 * m2);
    const double skew = n >= 3 ? g1 * std::sqrt(double(n) * (n - 1)) / (n - 2) : nan;
    const double kurt = n >= 4
        ? ((n + 1.0) * b2 - 3.0 * (n - 1)) * (n - 1.0) / ((n - 2.0) * (n - 3.0)) + 3.0
        : nan;

    return DescriptiveStats{
        s.front(), mean, std::sqrt(var_sample), skew, kurt,
        sample_quantile(s, 0.25), sample_quantile(s, 0.5), sample_quantile(s, 0.75),
        s.back(),
    };
}

} // namespace unitfit
