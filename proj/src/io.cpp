#include "ebw/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ebw/errors.hpp"

namespace ebw::io {

using nlohmann::json;

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + path);
    return f;
}

} // namespace

designs::Design read_design_json(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("design JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("v") || !j.contains("blocks"))
        throw ParseError("design JSON needs \"v\" and \"blocks\"");
    if (!j["v"].is_number_integer()) throw ParseError("\"v\" must be an integer");
    if (!j["blocks"].is_array()) throw ParseError("\"blocks\" must be an array");
    designs::Design d;
    d.v = j["v"].get<int>();
    for (const auto& b : j["blocks"]) {
        if (!b.is_array()) throw ParseError("each block must be an array");
        std::vector<int> block;
        for (const auto& p : b) {
            if (!p.is_number_integer()) throw ParseError("block entries must be integers");
            block.push_back(p.get<int>());
        }
        d.blocks.push_back(std::move(block));
    }
    return d;
}

designs::Design read_design_json_file(const std::string& path) {
    auto f = open_in(path);
    return read_design_json(f);
}

void write_design_json(std::ostream& out, const designs::Design& d) {
    designs::Design c = d;
    c.canonicalize();
    json j;
    j["v"] = c.v;
    j["blocks"] = c.blocks;
    out << j.dump(2) << "\n";
}

void write_design_json_file(const std::string& path, const designs::Design& d) {
    auto f = open_out(path);
    write_design_json(f, d);
}

gf2::BinaryMatrix read_alist(std::istream& in) {
    long long n = 0, m = 0, maxc = 0, maxr = 0;
    if (!(in >> n >> m >> maxc >> maxr)) throw ParseError("alist: bad header");
    if (n < 1 || m < 1) throw ParseError("alist: dimensions must be positive");
    std::vector<long long> cdeg(n), rdeg(m);
    for (auto& d : cdeg)
        if (!(in >> d) || d < 0 || d > m) throw ParseError("alist: bad column degree");
    for (auto& d : rdeg)
        if (!(in >> d) || d < 0 || d > n) throw ParseError("alist: bad row degree");

    gf2::BinaryMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    for (long long c = 0; c < n; ++c) {
        long long seen = 0;
        for (long long k = 0; k < maxc; ++k) {
            long long idx;
            if (!(in >> idx)) throw ParseError("alist: truncated column list");
            if (idx == 0) continue;
            if (idx < 1 || idx > m) throw ParseError("alist: row index out of range");
            if (h.get(static_cast<std::size_t>(idx - 1), static_cast<std::size_t>(c)))
                throw ParseError("alist: duplicate entry");
            h.set(static_cast<std::size_t>(idx - 1), static_cast<std::size_t>(c), true);
            ++seen;
        }
        if (seen != cdeg[c]) throw ParseError("alist: column degree mismatch");
    }
    for (long long r = 0; r < m; ++r) {
        long long seen = 0;
        for (long long k = 0; k < maxr; ++k) {
            long long idx;
            if (!(in >> idx)) throw ParseError("alist: truncated row list");
            if (idx == 0) continue;
            if (idx < 1 || idx > n) throw ParseError("alist: column index out of range");
            if (!h.get(static_cast<std::size_t>(r), static_cast<std::size_t>(idx - 1)))
                throw ParseError("alist: row list disagrees with column list");
            ++seen;
        }
        if (seen != rdeg[r]) throw ParseError("alist: row degree mismatch");
    }
    return h;
}

gf2::BinaryMatrix read_alist_file(const std::string& path) {
    auto f = open_in(path);
    return read_alist(f);
}

void write_alist(std::ostream& out, const gf2::BinaryMatrix& h) {
    std::size_t m = h.rows(), n = h.cols();
    std::vector<std::vector<std::size_t>> col_rows(n), row_cols(m);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (h.get(r, c)) {
                col_rows[c].push_back(r + 1);
                row_cols[r].push_back(c + 1);
            }
    std::size_t maxc = 0, maxr = 0;
    for (const auto& v : col_rows) maxc = std::max(maxc, v.size());
    for (const auto& v : row_cols) maxr = std::max(maxr, v.size());

    out << n << " " << m << "\n" << maxc << " " << maxr << "\n";
    for (std::size_t c = 0; c < n; ++c) out << col_rows[c].size() << (c + 1 < n ? " " : "\n");
    for (std::size_t r = 0; r < m; ++r) out << row_cols[r].size() << (r + 1 < m ? " " : "\n");
    auto dump_padded = [&](const std::vector<std::size_t>& v, std::size_t width) {
        for (std::size_t i = 0; i < width; ++i)
            out << (i < v.size() ? v[i] : 0) << (i + 1 < width ? " " : "\n");
    };
    for (std::size_t c = 0; c < n; ++c) dump_padded(col_rows[c], maxc);
    for (std::size_t r = 0; r < m; ++r) dump_padded(row_cols[r], maxr);
}

void write_alist_file(const std::string& path, const gf2::BinaryMatrix& h) {
    auto f = open_out(path);
    write_alist(f, h);
}

InputFormat detect_format(const std::string& path) {
    auto ends_with = [&](const std::string& suffix) {
        return path.size() >= suffix.size() &&
               path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
    };
    if (ends_with(".json")) return InputFormat::design_json;
    if (ends_with(".alist")) return InputFormat::alist;
    auto f = open_in(path);
    char ch = 0;
    while (f.get(ch) && (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t')) {
    }
    return ch == '{' ? InputFormat::design_json : InputFormat::alist;
}

std::string fingerprint_bytes(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fingerprint_file(const std::string& path) {
    auto f = open_in(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return fingerprint_bytes(ss.str());
}

} // namespace ebw::io
